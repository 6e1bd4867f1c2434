"""Score a trained model and draw its precision-recall curve.

Pixels from all images of a split are pooled into one curve (the standard
convention for lesion segmentation benchmarks); per-image AUPR is reported
alongside as a diagnostic. Run demos/03_train_and_infer.py first to produce
the checkpoint this script loads.
"""

import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from lesionseg.data import DESK_GEOMETRY, load_manifest
from lesionseg.infer import infer_full
from lesionseg.metrics import evaluate_split, write_curve_csv
from lesionseg.train import (
    Stage,
    TrainConfig,
    checkpoint_path,
    load_checkpoint,
    load_model,
)

out = Path(__file__).parent / "output"
ckpt_file = checkpoint_path(out / "run", Stage.finetune_all)
if not ckpt_file.exists():
    sys.exit("no checkpoint found; run demos/03_train_and_infer.py first")

# same architecture settings as demos/03_train_and_infer.py; the checkpoint
# fingerprint guards against accidental mismatch
config = TrainConfig(lesion_class="MA", geometry=DESK_GEOMETRY,
                     base_channels=8, global_depth=3, local_depth=3, seed=0)
model = load_model(config, load_checkpoint(ckpt_file))

manifest = load_manifest(out / "data", "MA", DESK_GEOMETRY)
maps, truths = {}, {}
for sid in manifest.train_ids:
    sample = manifest.load_sample(sid)
    maps[sid] = infer_full(model, sample.image, DESK_GEOMETRY).values
    truths[sid] = sample.mask

scores = evaluate_split(maps, truths)
print(f"pooled AUPR over {len(maps)} images: {scores.pooled_aupr:.4f}")
for sid, value in sorted(scores.per_image_aupr.items()):
    print(f"  {sid}: {value:.4f}")

write_curve_csv(scores.pooled_curve, out / "pr_MA.csv")

curve = scores.pooled_curve
fig, ax = plt.subplots(figsize=(5, 5))
ax.plot(curve.recalls, curve.precisions)
ax.set_xlabel("recall")
ax.set_ylabel("precision")
ax.set_xlim(0, 1)
ax.set_ylim(0, 1.02)
ax.set_title(f"MA pooled PR, AUPR = {scores.pooled_aupr:.3f}")
fig.savefig(out / "pr_MA.png", dpi=120, bbox_inches="tight")
print(f"curve written to {out / 'pr_MA.csv'} and {out / 'pr_MA.png'}")
