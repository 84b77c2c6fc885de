"""
Cubic q-Bezier patches
======================

Tessellate the two example cubic patches for several values of ``q`` and
write OBJ meshes. The corners never move with ``q``; the interior does.
"""
import pathlib

import numpy as np

from qbezier import boundary_curve, figure4_net, figure5_net, patch_eval, tessellate
from qbezier.patch import convex_hull_contains

out_dir = pathlib.Path(__file__).parent / "_output"
out_dir.mkdir(exist_ok=True)

for name, net in (("figure4", figure4_net()), ("figure5", figure5_net())):
    for q in (0.1, 0.5, 1.0):
        mesh = tessellate(net, q, 16)
        path = out_dir / f"{name}_q{q}.obj"
        path.write_text(mesh.to_obj())
        inside = convex_hull_contains(net.values, mesh.vertices).all()
        centre = patch_eval(net, (1 / 3, 1 / 3), q)
        print(f"{name} q={q}: centre {np.round(centre, 4)}, inside hull: {inside}, wrote {path.name}")

###############################################################################
# Boundary curve along v = 0 for the first patch.
for t in np.linspace(0, 1, 5):
    print(t, np.round(boundary_curve(figure4_net(), "v=0", t, 0.5), 4))

###############################################################################
# The same meshes from the command line:
#
#   qbezier tessellate demos/nets/figure4.json -m 16 --out figure4.obj
#   qbezier --q 0.1 tessellate demos/nets/figure4.json -m 16 --out figure4_q01.obj
