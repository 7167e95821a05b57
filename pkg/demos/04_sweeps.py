"""The six preset sweeps, written as CSV tables.

Each preset varies one quantity along the x axis and draws one column per
series value. Pass an output directory as the first argument.
"""
# %%
import sys
from pathlib import Path

import numpy as np

from skidsim import fig2_presets, run_sweep
from skidsim.tables import sweep_csv

out = Path(sys.argv[1] if len(sys.argv) > 1 else "sweeps")
out.mkdir(exist_ok=True)

# %%
for spec in fig2_presets():
    table = run_sweep(spec)
    (out / f"{spec.name}.csv").write_text(sweep_csv(table))
    lo, hi = np.nanmin(table.values), np.nanmax(table.values)
    print(f"{spec.name}: x={spec.x_var:<8} series={spec.series_var:<8} eps_z in [{lo:+.3f}, {hi:+.3f}]")
