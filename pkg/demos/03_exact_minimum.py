# %% [markdown]
# # Exact minimum colors on tiny grids
#
# Backtracking with canonical color order. Every 4-cycle must see at least q
# colors; the table lists the least number of colors that makes this possible.

# %%
from almost_rainbow import min_colors_exhaustive

for rows in range(2, 5):
    cells = []
    for cols in range(2, 6):
        res = min_colors_exhaustive(rows, cols, q=3)
        cells.append(f"{res.min_colors:>3}")
    print(f"rows={rows}:", " ".join(cells))

# %% [markdown]
# The square cases give 3 for K_{3,3} and 4 for K_{4,4}, both at most n. No
# explicit construction covers n = 4, but the search finds one directly.

# %%
res = min_colors_exhaustive(4, 4)
print(res.min_colors, res.nodes_explored)
for row in res.witness:
    print(row)

# %% [markdown]
# Requiring rainbow cycles (q = 4) costs more colors.

# %%
print([min_colors_exhaustive(2, c, q=4).min_colors for c in (2, 3, 4)])
