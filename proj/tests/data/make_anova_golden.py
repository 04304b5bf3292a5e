# Regenerates anova_fixture.csv and anova_fixture_golden.csv with statsmodels.
# Run from tests/data/.
import numpy as np, pandas as pd, itertools
import statsmodels.formula.api as smf
from statsmodels.stats.anova import anova_lm
rng=np.random.default_rng(20261014)
rows=[]
for a,b,c in itertools.product(range(2),range(3),range(2)):
    for blk in range(3):
        y=50+3*a-2*b+1.5*a*b+0.8*c+2.0*blk+rng.normal(0,1.5)
        rows.append((a,b,c,blk,round(y,3)))
df=pd.DataFrame(rows,columns=['a','b','c','block','y'])
df.to_csv('anova_fixture.csv',index=False)
m=smf.ols('y ~ C(block) + C(a)*C(b)*C(c)',data=df).fit()
t=anova_lm(m,typ=1)
names={'C(block)':'Replication','C(a)':'A','C(b)':'B','C(c)':'C','C(a):C(b)':'A x B','C(a):C(c)':'A x C','C(b):C(c)':'B x C','C(a):C(b):C(c)':'A x B x C','Residual':'Error'}
with open('anova_fixture_golden.csv','w') as f:
    f.write('source,df,ss,ms,f,p\n')
    for idx,r in t.iterrows():
        f.write(f"{names[idx]},{int(r['df'])},{float(r['sum_sq'])!r},{float(r['mean_sq'])!r},{'' if np.isnan(r['F']) else repr(float(r['F']))},{'' if np.isnan(r['PR(>F)']) else repr(float(r['PR(>F)']))}\n")
    tot=((df.y-df.y.mean())**2).sum()
    f.write(f"Total,{len(df)-1},{float(tot)!r},,,\n")
print(open('anova_fixture_golden.csv').read())
