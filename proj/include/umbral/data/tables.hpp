#pragma once

// Embedded arithmetic data for the four lambencies handled by this library:
// character tables of the umbral groups (and of the maximal subgroups acting
// in the lambency 4 and 5 constructions), twisted-sector eigenvalue tables for
// the free-field realizations, and the Euler characters weighting the polar
// Appell terms.  The text format is parsed by table_format.hpp; see that
// header for the token grammar.
//
// Group identifications:
//   G7     = SL2(3)        (lambency 7,  |G| = 24)
//   G13    = Z/4           (lambency 13, |G| = 4)
//   G4     = 2.AGL3(2)     (lambency 4,  |G| = 2688)
//   G4_336 = SL2(7)        (maximal subgroup acting at lambency 4)
//   G5     = GL2(5)/2      (lambency 5,  |G| = 240)
//   G5_24  = S3 x 4        (maximal subgroup acting at lambency 5)
//
// Subgroup tables carry a "fusion" line mapping each subgroup class to the
// ambient class containing it.

namespace umbral::data {

inline constexpr const char* kCharsG7 = R"(
# Irreducible characters of SL2(3)
classes: 1A 2A 4A 3A 6A 3B 6B
chi1: 1 1 1 1 1 1 1
chi2: 1 1 1 b3 ~b3 ~b3 b3
chi3: 1 1 1 ~b3 b3 b3 ~b3
chi4: 3 3 -1 0 0 0 0
chi5: 2 -2 0 -1 1 -1 1
chi6: 2 -2 0 -~b3 b3 -b3 ~b3
chi7: 2 -2 0 -b3 ~b3 -~b3 b3
)";

inline constexpr const char* kCharsG13 = R"(
# Irreducible characters of the cyclic group of order 4
classes: 1A 2A 4A 4B
chi1: 1 1 1 1
chi2: 1 1 -1 -1
chi3: 1 -1 a1 ~a1
chi4: 1 -1 ~a1 a1
)";

inline constexpr const char* kCharsG4 = R"(
# Irreducible characters of 2.AGL3(2)
classes: 1A 2A 2B 2C 4A 4B 3A 6A 6B 6C 4C 8A 7A 7B 14A 14B
chi1:  1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1
chi2:  3 3 3 -1 -1 -1 0 0 0 0 1 1 b7 ~b7 b7 ~b7
chi3:  3 3 3 -1 -1 -1 0 0 0 0 1 1 ~b7 b7 ~b7 b7
chi4:  6 6 6 2 2 2 0 0 0 0 0 0 -1 -1 -1 -1
chi5:  7 7 7 -1 -1 -1 1 1 1 1 -1 -1 0 0 0 0
chi6:  8 8 8 0 0 0 -1 -1 -1 -1 0 0 1 1 1 1
chi7:  7 7 -1 3 -1 -1 1 1 -1 -1 1 -1 0 0 0 0
chi8:  7 7 -1 -1 3 -1 1 1 -1 -1 -1 1 0 0 0 0
chi9:  14 14 -2 2 2 -2 -1 -1 1 1 0 0 0 0 0 0
chi10: 21 21 -3 -3 1 1 0 0 0 0 1 -1 0 0 0 0
chi11: 21 21 -3 1 -3 1 0 0 0 0 -1 1 0 0 0 0
chi12: 8 -8 0 0 0 0 2 -2 0 0 0 0 1 1 -1 -1
chi13: 8 -8 0 0 0 0 -1 1 a3 ~a3 0 0 1 1 -1 -1
chi14: 8 -8 0 0 0 0 -1 1 ~a3 a3 0 0 1 1 -1 -1
chi15: 24 -24 0 0 0 0 0 0 0 0 0 0 b7 ~b7 -b7 -~b7
chi16: 24 -24 0 0 0 0 0 0 0 0 0 0 ~b7 b7 -~b7 -b7
)";

inline constexpr const char* kCharsG4Sub = R"(
# Irreducible characters of SL2(7), with fusion into 2.AGL3(2)
classes: 1A 2A 4A 3A 6A 8A 8B 7A 7B 14A 14B
fusion:  1A 2A 4A 3A 6A 8A 8A 7A 7B 14A 14B
chi1:  1 1 1 1 1 1 1 1 1 1 1
chi2:  3 3 -1 0 0 1 1 b7 ~b7 b7 ~b7
chi3:  3 3 -1 0 0 1 1 ~b7 b7 ~b7 b7
chi4:  6 6 2 0 0 0 0 -1 -1 -1 -1
chi5:  7 7 -1 1 1 -1 -1 0 0 0 0
chi6:  8 8 0 -1 -1 0 0 1 1 1 1
chi7:  4 -4 0 1 -1 0 0 -b7 -~b7 b7 ~b7
chi8:  4 -4 0 1 -1 0 0 -~b7 -b7 ~b7 b7
chi9:  6 -6 0 0 0 r2 -r2 -1 -1 1 1
chi10: 6 -6 0 0 0 -r2 r2 -1 -1 1 1
chi11: 8 -8 0 -1 1 0 0 1 1 -1 -1
)";

inline constexpr const char* kCharsG5 = R"(
# Irreducible characters of GL2(5)/2
classes: 1A 2A 4A 4B 2B 2C 4C 4D 3A 6A 12A 12B 5A 10A
chi1:  1 1 1 1 1 1 1 1 1 1 1 1 1 1
chi2:  1 1 -1 -1 1 1 -1 -1 1 1 -1 -1 1 1
chi3:  1 -1 a1 ~a1 1 -1 a1 ~a1 1 -1 a1 ~a1 1 -1
chi4:  1 -1 ~a1 a1 1 -1 ~a1 a1 1 -1 ~a1 a1 1 -1
chi5:  4 4 2 2 0 0 0 0 1 1 -1 -1 -1 -1
chi6:  4 4 -2 -2 0 0 0 0 1 1 1 1 -1 -1
chi7:  4 -4 2*a1 2*~a1 0 0 0 0 1 -1 ~a1 a1 -1 1
chi8:  4 -4 2*~a1 2*a1 0 0 0 0 1 -1 a1 ~a1 -1 1
chi9:  5 5 1 1 1 1 -1 -1 -1 -1 1 1 0 0
chi10: 5 5 -1 -1 1 1 1 1 -1 -1 -1 -1 0 0
chi11: 5 -5 a1 ~a1 1 -1 ~a1 a1 -1 1 a1 ~a1 0 0
chi12: 5 -5 ~a1 a1 1 -1 a1 ~a1 -1 1 ~a1 a1 0 0
chi13: 6 6 0 0 -2 -2 0 0 0 0 0 0 1 1
chi14: 6 -6 0 0 -2 2 0 0 0 0 0 0 1 -1
)";

inline constexpr const char* kCharsG5Sub = R"(
# Irreducible characters of S3 x 4, with fusion into GL2(5)/2
classes: 1A 2A 4A 4B 2B 2C 4C 4D 3A 6A 12A 12B
fusion:  1A 2A 4A 4B 2B 2C 4A 4B 3A 6A 12A 12B
chi1:  1 1 1 1 1 1 1 1 1 1 1 1
chi2:  1 1 -1 -1 1 1 -1 -1 1 1 -1 -1
chi3:  1 -1 a1 ~a1 1 -1 a1 ~a1 1 -1 a1 ~a1
chi4:  1 -1 ~a1 a1 1 -1 ~a1 a1 1 -1 ~a1 a1
chi5:  1 1 1 1 -1 -1 -1 -1 1 1 1 1
chi6:  1 1 -1 -1 -1 -1 1 1 1 1 -1 -1
chi7:  1 -1 a1 ~a1 -1 1 ~a1 a1 1 -1 a1 ~a1
chi8:  1 -1 ~a1 a1 -1 1 a1 ~a1 1 -1 ~a1 a1
chi9:  2 2 2 2 0 0 0 0 -1 -1 -1 -1
chi10: 2 2 -2 -2 0 0 0 0 -1 -1 1 1
chi11: 2 -2 2*a1 2*~a1 0 0 0 0 -1 1 ~a1 a1
chi12: 2 -2 2*~a1 2*a1 0 0 0 0 -1 1 a1 ~a1
)";

// Twisted-sector eigenvalue tables.  "sectors" lists the tensor factors as
// kind@charge*dim: a Clifford sector of charge w and dimension d contributes
// prod_i (1 - conj(l_i) y^-w q^{n-1})(1 - l_i y^w q^n) to the trace numerator,
// a Weyl sector the reciprocal factors to the denominator.  Each class row
// lists the eigenvalue multiset per sector, sectors separated by '|'.

inline constexpr const char* kEigenL7 = R"(
lambency: 7
sectors: clifford@4*1 weyl@1*2
1A: 1 | 1 1
2A: 1 | -1 -1
4A: 1 | i -i
3A: w | 1 w
6A: w^2 | -1 -w^2
3B: w^2 | 1 w^2
6B: w | -1 -w
)";

inline constexpr const char* kEigenL13 = R"(
lambency: 13
sectors: clifford@6*1 weyl@1*1 weyl@3*1
1A: 1 | 1 | 1
2A: 1 | -1 | -1
4A: -1 | i | i
4B: -1 | -i | -i
)";

inline constexpr const char* kEigenL4 = R"(
lambency: 4
sectors: clifford@2*3 weyl@1*4
1A: 1 1 1 | 1 1 1 1
2A: 1 1 1 | -1 -1 -1 -1
4A: 1 -1 -1 | i i -i -i
3A: 1 w w^2 | 1 1 w w^2
6A: 1 w w^2 | -1 -1 -w -w^2
8A: 1 i -i | z8 z8^3 z8^5 z8^7
7A: z7 z7^2 z7^4 | 1 z7 z7^2 z7^4
7B: z7^3 z7^5 z7^6 | 1 z7^3 z7^5 z7^6
14A: z7 z7^2 z7^4 | -1 -z7 -z7^2 -z7^4
14B: z7^3 z7^5 z7^6 | -1 -z7^3 -z7^5 -z7^6
)";

inline constexpr const char* kEigenL5 = R"(
lambency: 5
sectors: clifford@2*1 clifford@3*1 weyl@1*3
1A: 1 | 1 | 1 1 1
2A: 1 | -1 | -1 -1 -1
2B: 1 | 1 | 1 -1 -1
2C: 1 | -1 | 1 1 -1
3A: 1 | 1 | 1 w w^2
6A: 1 | -1 | -1 -w -w^2
4A: -1 | i | i -i -i
4B: -1 | -i | i i -i
12A: -1 | i | -i*w i -i*w^2
12B: -1 | -i | i*w -i i*w^2
)";

// Euler characters: the class functions weighting the two parity components
// of the polar Appell term in the theta decomposition.  Merged column labels
// such as 3AB cover the classes 3A and 3B.

inline constexpr const char* kEulerL7 = R"(
lambency: 7
classes: 1A 2A 4A 3AB 6AB
chibar: 4 4 0 1 1
chi: 4 -4 0 1 -1
)";

inline constexpr const char* kEulerL13 = R"(
lambency: 13
classes: 1A 2A 4AB
chibar: 2 2 0
chi: 2 -2 0
)";

inline constexpr const char* kEulerL4 = R"(
lambency: 4
classes: 1A 2A 2B 4A 4B 2C 3A 6A 6BC 8A 4C 7AB 14AB
chibar: 8 8 0 0 0 4 2 2 0 0 2 1 1
chi: 8 -8 0 0 0 0 2 -2 0 0 0 1 -1
)";

inline constexpr const char* kEulerL5 = R"(
lambency: 5
classes: 1A 2A 2B 2C 3A 6A 5A 10A 4AB 4CD 12AB
chibar: 6 6 2 2 0 0 1 1 0 2 0
chi: 6 -6 -2 2 0 0 1 -1 0 0 0
)";

}  // namespace umbral::data
