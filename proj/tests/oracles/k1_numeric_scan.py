import numpy as np, sys
th = np.array(sorted(np.roots([1,0,-3,1]).real))
s6 = np.sqrt(6.0)
R = int(sys.argv[1]); den = float(sys.argv[2])
rng = np.arange(-R, R+1, dtype=np.float64)/den
g = np.stack(np.meshgrid(*([rng]*3), indexing='ij'), -1).reshape(-1, 3)
A = g @ np.vstack([np.ones(3), th, th**2])
out=[]
tp, tm = 5+2*s6, 5-2*s6
for bi in range(A.shape[0]):
    B = A[bi]
    Np = np.prod(A + B*s6, axis=1)
    Nm = np.prod(A - B*s6, axis=1)
    for (tp_, tm_) in ((tp,tm),(tm,tp),(-tp,-tm),(-tm,-tp)):
        ok = (np.abs(Np - tp_) < 1e-6) & (np.abs(Nm - tm_) < 1e-6)
        for ai in np.nonzero(ok)[0][:2]:
            out.append((tuple(g[ai]*den), tuple(g[bi]*den), tp_))
    if len(out) > 6: break
print(out)
