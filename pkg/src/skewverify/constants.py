"""Published data for the automorphism of D and the inner witness d.

Every K-entry is written in power-basis order (a0, a1, a2) = a0 + a1·α + a2·α².
Matrices are indexed [i][j] with i the power of θ and j the power of u.
"""

from __future__ import annotations

THETA_IMAGE_DENOMINATOR = 673

THETA_IMAGE_NUMERATORS = (
    ((-276, -154, 303), (-326, 218, 314), (157, 151, -48)),
    ((-855, 708, 390), (430, -238, 40), (275, -27, -397)),
    ((543, 25, -106), (-30, -46, -128), (-63, 38, 135)),
)

# λ = (α² + α) + (1 − α)θ − θ², as three K-coordinates over (1, θ, θ²)
LAMBDA_COORDS = ((0, 1, 1), (1, -1, 0), (-1, 0, 0))

# d = Σ d_ij θ^i u^j.  The commonly tabulated matrix carries the opposite
# sign in the u¹ column (j = 1); with those signs neither σ̃(d) = d nor
# σ̃³ = Inn(d) holds, while this matrix satisfies both exactly.
D_ENTRIES = (
    ((136, 536, 468), (184, -30, -52), (77, -357, -126)),
    ((-624, -244, 628), (-574, -14, 350), (-201, -163, 151)),
    ((324, -240, -416), (-84, 14, -14), (-124, 166, 74)),
)

D_ENTRIES_TABULATED = (
    ((136, 536, 468), (-184, 30, 52), (77, -357, -126)),
    ((-624, -244, 628), (574, 14, -350), (-201, -163, 151)),
    ((324, -240, -416), (84, -14, 14), (-124, 166, 74)),
)
