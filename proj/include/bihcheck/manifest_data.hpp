#pragma once

#include <string_view>

namespace bih {

// Embedded manifest of named polynomials. Generic entries keep m, r, c
// symbolic; denominators (m - r) are cleared by one multiplication, noted
// per entry. Grammar: see expr.hpp.
inline constexpr std::string_view kDefaultManifest = R"MANIFEST(# Coefficients of Omega and Theta in the tangent relation.
P := 9/4*m^3*(3*m - 2*r + 17)*f^3 + 3/2*m^2*(6*r^2 - 43*r + 37 + 11*m - 11*m*r)*f^2*k + m*(r - 1)*(26*r + 4*m*r + 1 - 4*m)*f*k^2 + m*(m - r)*(8*r - 5*m*r - 13*m - 17)*c*f - 2*(r - 1)^2*(7 + 2*m)*k^3 + 2*(m - r)*(r - 1)*(m + 17)*c*k
Q := 9/2*m^3*(2*r - 2*m - 3)*f^3 + 9/2*m^2*(7*r - m + 3 - m^2 + 3*m*r - 2*r^2)*f^2*k + 2*m*(r - 1)*(4*m - 13*r - 18 - 2*m*r + 2*m^2)*f*k^2 + m*(m - r)*(5*m*r - 5*m^2 - 7*m - 8*r + 42)*c*f + 2*(r - 1)^2*(7 + 2*m)*k^3 - 2*(r - 1)*(m - r)*(m + 17)*c*k
# (m - r) * R, R the right-hand side of the quadratic Omega/Theta relation.
Rm := 9/4*m^3*(m - r + 6)*f^3 + 3/2*m^2*(r - 1)*(2*r - 2*m - 15)*f^2*k + m*(r - 1)*(m + 11*r - 12 + 2*m*r - 2*r^2)*f*k^2 + 2*(r - 1)^2*(m - 2*r + 1)*k^3 - (m - r)*m*(2*m*r + 4*m - 2*r^2 + 5*r)*c*f - 2*(m - r)*(r - 1)*(m - 2*r + 1)*c*k
# 2 (m - r) (c + k2 k3)
W := 2*(m - r)*c + 3*m*f*k - 2*(r - 1)*k^2
# (m - r) * H, the first relation in (f, k2)
Hgen := 1/2*(3 + r - m)*(m*(m - r + 3)*f - 2*(r - 1)*k)*P^2*W + 1/2*(r - 1)*(4 - r)*(m*f + 2*k)*Q^2*W - P*Q*Rm
# df/dk2 = DerFNum / DerFDen before cancellation.
DerFNum := 2*(r - 1)*(m*f + 2*k)*Q - 2*(m*(m - r + 3)*f - 2*(r - 1)*k)*P
DerFDen := 3*m*(m*f + 2*k)*Q
k1 := -1/2*m*f
# (m - r) * k3
k3m := 3/2*m*f - (r - 1)*k
# (m - r) * cubic part of the Omega/Theta-free terms of the first tangent relation.
Rel1Cubic := 3/4*m^2*(m - r + 6)*f^3 - 3/2*m*(m + 4*r - 2)*f^2*k + 3*m*(r - 1)*f*k^2 - 3*(m + 1)*(m - r)*c*f
delta := 28*k^2 - 98*f*k + 147*f^2 - 32*c
CoefF3 := 1474560*c^3*(-1 + m)*m^3*(5 + m)*(7 + 2*m)^3*(20 - 3*m + m^2)^2*(m - r)^3*(-1 + r)^6
# Factored forms at m = 7, r = 4.
SpecialCase1 := 45927/16*(32*c - 147*f^2 + 98*f*k - 28*k^2)*(336*c*f - 1715*f^3 - 32*c*k + 1470*f^2*k - 294*f*k^2 + 28*k^3)*(32*c*(7*f + k) + 7*(147*f^3 - 63*f^2*k - 4*k^3))
SpecialCase2Bracket := 81920*c^3*(343*f^2 + 7*f*k - 2*k^2) - 7168*c^2*(66542*f^4 - 12201*f^3*k + 2653*f^2*k^2 + 476*f*k^3 - 68*k^4) - 784*c*(2384193*f^6 - 1172717*f^5*k + 559384*f^4*k^2 - 154252*f^3*k^3 + 40656*f^2*k^4 - 6384*f*k^5 + 608*k^6) + 2401*(6950895*f^8 - 10169607*f^7*k + 5436942*f^6*k^2 - 1685894*f^5*k^3 + 421456*f^4*k^4 - 69608*f^3*k^5 + 10288*f^2*k^6 - 896*f*k^7 + 64*k^8)
SpecialCase2 := 1240029/16*(7*f - 4*k)*(32*c - 147*f^2 + 98*f*k - 28*k^2)*SpecialCase2Bracket
# Particular forms along the curve at m = 7, r = 4, written A*s = B with s = (f')^2.
Gauss3P1A := 98*(k - 3*f)*(2*k - f)
Gauss3P1B := (7*f*k - 2*k^2 + 2*c)*(4*k - 7*f)^2*(7*f + 2*k)*(k - 7*f)
Gauss3P2A := 98^2*(32*c - 105*f^2)
Gauss3P2B := (147*f^2 - 4*c)*(128*c - 245*f^2)*(-833*f^2 + 32*c)
# 98 * (coefficient of s, coefficient of f'', free part) of the differentiated second form.
DerFP1S := -20580*f
DerFP1Fpp := 196*(32*c - 105*f^2)
DerFP1Rhs := 3*f*(128*c - 245*f^2)*(-833*f^2 + 32*c) - 5*f*(147*f^2 - 4*c)*(-833*f^2 + 32*c) - 17*f*(147*f^2 - 4*c)*(128*c - 245*f^2)
Nonic := 14386462720*c^4*f - 356598824960*c^3*f^3 - 2331746708480*c^2*f^5 + 42758681977200*c*f^7 + 151265495839500*f^9
# Leading z-coefficients of the reduced resultant, generic and on m = 2 r - 1.
DominantCoef := -6917529027641081856*c^12*(-10 + m)^3*(-7 + m)^3*(-3 + m)*(-1 + m)^2*m^8*(5 + m)*(7 + 2*m)^5*(7 - 5*m + m^2)*(20 - 3*m + m^2)^4*(-196 + 23*m + 11*m^2)*(-497 + 16*m + 49*m^2)*(1 + m - 2*r)*(m - r)^12*(-1 + r)^28
ResSpecialLeading := -56668397794435742564352*c^12*(11 - 2*r)^2*(-4 + r)^4*(-2 + r)*(-1 + r)^42*(2 + r)*(-1 + 2*r)^9*(5 + 4*r)^5*(13 - 14*r + 4*r^2)*(12 - 5*r + 2*r^2)^4*(-116 - 41*r + 49*r^2)*(-2356 - 1035*r + 120*r^2 + 112*r^3)
)MANIFEST";

}  // namespace bih
