# %% [markdown]
# # Building the n-color matrix
#
# Rows are left vertices of K_{n,n}, columns right vertices, entries edge colors.
# A 4-cycle is a 2x2 submatrix; we want each to show at least three colors.

# %%
import numpy as np

from almost_rainbow import build_matrix, classify, first_column, last_row

for n in (6, 8, 10, 12, 22, 28, 7, 4):
    cls = classify(n)
    print(n, cls.tag, cls.variant, cls.reason or "")

# %% [markdown]
# Order 8 falls in the n = 2 (mod 6) family. The body is a cyclic shift pattern,
# the first column and last row are piecewise.

# %%
mat = build_matrix(8)
print(mat.entries)
print("first column:", first_column(8))
print("last row:    ", last_row(8))

# %% [markdown]
# The diagonal is all ones and every body row is a permutation of 1..n-1.

# %%
g = mat.entries
print("diagonal:", np.diag(g))
print("body rows distinct:", all(len(set(r)) == 7 for r in g[1:7, 1:].tolist()))

# %% [markdown]
# Serialization: JSON keeps the family tag, CSV is bare rows.

# %%
print(mat.to_json()[:80], "...")
print(build_matrix(6).to_csv())
