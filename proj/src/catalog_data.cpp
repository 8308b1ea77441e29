#include "radon/space.hpp"

namespace radon {

// Mirrored verbatim in data/catalog.spaces; a test keeps the two in sync.
const std::string& bundled_catalog_text() {
    static const std::string text = R"CAT(# Bundled symmetric-space catalog.
# Format: see docs/catalog-format.md. Rationals are written p/q.

[space]
name = sphere-2
series = A
rank = 1
theta = [[-1, 0], [0, -1]]
analytic_lattice = root
flavor = K0
oracle = su2
comment = round 2-sphere SO(3)/SO(2); root-lattice integrality matches G = SO(3)

[space]
name = rp-2
series = A
rank = 1
theta = [[-1, 0], [0, -1]]
analytic_lattice = root
flavor = KZ
oracle = su2
comment = real projective plane, the adjoint form of sphere-2

[space]
name = sphere-4
series = B
rank = 2
theta = [[-1, 0], [0, 1]]
analytic_lattice = weight
flavor = K0
oracle = so5
comment = round 4-sphere SO(5)/SO(4) in orthogonal coordinates; G realized through Spin(5)

[space]
name = su3-mod-so3
series = A
rank = 2
theta = [[-1, 0, 0], [0, -1, 0], [0, 0, -1]]
analytic_lattice = weight
flavor = K0
oracle = su3
comment = SU(3)/SO(3), the 5-dimensional Wu manifold; G = SU(3) simply connected

[space]
name = group-su2
series = AxA
rank = 1x1
theta = [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]]
analytic_lattice = weight
flavor = K0
oracle = su2xsu2
comment = SU(2) as (SU(2)xSU(2))/diag, the 3-sphere as a group manifold; theta swaps the factors

[space]
name = sphere-6
series = B
rank = 3
theta = [[-1, 0, 0], [0, 1, 0], [0, 0, 1]]
analytic_lattice = weight
flavor = K0
comment = round 6-sphere SO(7)/SO(6); no desk-scale matrix oracle is paired

[space]
name = cp-2
series = A
rank = 2
theta = [[0, 1, 0], [1, 0, 0], [0, 0, 1]]
analytic_lattice = weight
flavor = K0
comment = complex projective plane SU(3)/S(U(1)xU(2)); non-reduced restricted system BC1; its own adjoint form, so the transform is injective
)CAT";
    return text;
}

}  // namespace radon
