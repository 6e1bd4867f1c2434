"""Generate the two synthetic dataset flavors and look at their morphology.

The `scattered` flavor mimics many small bright lesions spread over the
fundus; `compact` mimics a few large dark regions. Both are written in the
standard dataset layout (images/, masks/<CLASS>/, splits/<CLASS>.json) that
the training and evaluation code consumes.
"""

import tempfile
from pathlib import Path

import numpy as np
from scipy import ndimage

from lesionseg.data import DESK_GEOMETRY, synth_dataset

out = Path(tempfile.mkdtemp(prefix="lesionseg_demo_"))

scattered = synth_dataset("scattered", 4, DESK_GEOMETRY, seed=0,
                          out_dir=out / "scattered")
compact = synth_dataset("compact", 4, DESK_GEOMETRY, seed=0,
                        out_dir=out / "compact")

print(f"datasets written under {out}")
print(f"frame {DESK_GEOMETRY.frame}, global {DESK_GEOMETRY.global_size}, "
      f"patch grid {DESK_GEOMETRY.grid_shape}")
print()
print(f"{'dataset':<10} {'image':<6} {'pos frac':>9} {'components':>11}")
for name, man in [("scattered", scattered), ("compact", compact)]:
    for sid in man.train_ids:
        mask = man.load_sample(sid).mask
        n_comp = ndimage.label(mask)[1]
        print(f"{name:<10} {sid:<6} {mask.mean():>9.4f} {n_comp:>11d}")

# the defining difference: scattered lesions fragment into many small
# components, compact lesions form a few large ones
sc_masks = [scattered.load_sample(i).mask for i in scattered.train_ids]
co_masks = [compact.load_sample(i).mask for i in compact.train_ids]
sc_mean = np.mean([ndimage.label(m)[1] for m in sc_masks])
co_mean = np.mean([ndimage.label(m)[1] for m in co_masks])
print()
print(f"mean components per image: scattered {sc_mean:.1f}, compact {co_mean:.1f}")
