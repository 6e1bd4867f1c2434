"""Walk through the coordinate mapping that joins the two streams.

The full-resolution frame is tiled by an 11x13 grid of patches. Each patch
window has a footprint in the downsampled global frame; the global decoder's
penultimate features are cropped to that footprint and bilinearly rescaled
to patch size before being concatenated with the local features.
"""

import numpy as np
import torch

from lesionseg.data import DESK_GEOMETRY, FULL_GEOMETRY, patch_grid
from lesionseg.fusion import crop_and_rescale, map_window_to_global

for name, g in [("full", FULL_GEOMETRY), ("desk", DESK_GEOMETRY)]:
    grid = patch_grid(g.frame, g.patch_size)
    print(f"{name}: frame {g.frame}, {len(grid)} windows "
          f"({g.grid_shape[0]}x{g.grid_shape[1]}), patch {g.patch_size}")

g = DESK_GEOMETRY
grid = patch_grid(g.frame, g.patch_size)
print()
print("sample window footprints in the global frame "
      f"(note the two axes scale differently, {g.frame} -> {g.global_size}):")
for w in (grid[0], grid[71], grid[-1]):
    rect = map_window_to_global(w, g.global_size)
    print(f"  window ({w.row:2d},{w.col:2d}) rows [{w.top},{w.top + w.size})"
          f" cols [{w.left},{w.left + w.size}) -> "
          f"rows [{rect.top:6.2f},{rect.bottom:6.2f})"
          f" cols [{rect.left:6.2f},{rect.right:6.2f})")

# crop-and-rescale preserves position: a feature planted at a window's
# mapped center lands at the center of the rescaled crop
w = grid[71]
rect = map_window_to_global(w, g.global_size)
cy = (rect.top + rect.bottom) / 2
cx = (rect.left + rect.right) / 2
f_g = torch.zeros(1, *g.global_size, dtype=torch.float64)
f_g[0, int(cy), int(cx)] = 1.0
out = crop_and_rescale(f_g, rect, (g.patch_size, g.patch_size))[0]
iy, ix = np.unravel_index(out.argmax().item(), out.shape)
print()
print(f"impulse at global ({cy:.1f}, {cx:.1f}) -> peak of rescaled crop at "
      f"({iy}, {ix}); patch center is "
      f"({g.patch_size // 2}, {g.patch_size // 2})")
