#pragma once

#include <optional>

#include "dp4/pencil.hpp"

namespace dp4 {

/// Parameters (D; A1, A2, B) of the family
///   -A1 (T0 - T1)(T0 + T1) = T3^2 -     D T4^2,
///   -A2 (T0 - T2)(T0 + T2) = T3^2 - B^2 D T4^2.
struct FamilyParams {
    Int D, A1, A2, B;
};

/// Model of the surface as l_i1 l_i2 = l_i3^2 - D_i l_i4^2 for i = 1, 2,
/// where D_1 = D and D_2 = scale^2 * D lies in the same square class.
struct SDPresentation {
    Rat D;                          // non-square
    std::array<LinForm, 4> row1;    // l_11, l_12, l_13, l_14
    std::array<LinForm, 4> row2;    // l_21, l_22, l_23, l_24
    Rat scale = Rat(1);             // second-row discriminant is scale^2 * D

    /// The two defining quadratic forms implied by the rows.
    QuadForm5 form(int i) const;
    Pencil pencil() const { return {form(1), form(2)}; }
    SquareClass disc_class() const { return squarefree_part(D); }

    /// Identity check of the invariant above; throws when violated.
    void validate() const;
};

/// Quaternion Brauer class (Q(sqrt D)(X), tau, l_1i/l_2j) attached to an
/// SD presentation; all four quotient choices represent the same class.
struct BrauerClassRep {
    SDPresentation presentation;
    std::pair<int, int> quotient_choice{1, 1};  // (i, j), 1-indexed
};

/// Value of a local evaluation map: 0 or 1/2 in Q/Z.
enum class EvalValue { Zero, Half };
inline EvalValue operator+(EvalValue a, EvalValue b) {
    return a == b ? EvalValue::Zero : EvalValue::Half;
}

struct IndeterminateEval : std::runtime_error {
    IndeterminateEval() : std::runtime_error("all four quotients vanish at the point") {}
};

/// Sign automorphism (T0:...:T4) -> ((-1)^f0 T0 : ... : (-1)^f4 T4),
/// taken modulo the simultaneous flip.
struct SignAutomorphism {
    std::array<bool, 5> flips{};

    /// Representative with flips[0] = false.
    SignAutomorphism canonical() const;
    bool is_identity() const;
    std::vector<Int> apply(const std::vector<Int>& x) const;
    static std::vector<SignAutomorphism> all16();
};

/// Image i_alpha(sigma) of the witness homomorphism, as a quaternion class
/// (multiplier, D) with its set of nontrivial local components.
struct WitnessComponent {
    SquareClass multiplier;
    PlaceSet components;  // even cardinality
};

struct BrauerGroupInfo {
    int rank = 0;  // Br(X)/Br(Q) isomorphic to (Z/2Z)^rank
    /// One index pair per nontrivial class: the two scheme points whose
    /// common discriminant class realizes it as in the order-4 recipe.
    std::vector<std::pair<int, int>> generator_pairs;
};

struct ConstancyCertificate {
    enum class Kind { GoodReduction, Split, RamifiedCongruence, EvalImage };
    Kind kind;
    std::string detail;
};

/// Proof that the evaluation map is non-constant at a place.
struct WitnessProof {
    SignAutomorphism sigma;
    SquareClass multiplier;
    /// x3 value for the small-(x3, x4) point construction at the place.
    Rat point_x3;
};

// ---- operations ----

/// Presentation of the family surface; D must be a non-square.
SDPresentation build_presentation_family(const Rat& D, const Rat& A1, const Rat& A2,
                                         const Rat& B);

/// Local evaluation at an exact rational point on the surface.
EvalValue eval_at_rational_point(const BrauerClassRep& c, const std::vector<Int>& x,
                                 const Place& v);

/// Like the above but reports which quotient choices are admissible.
EvalValue eval_at_rational_point(const BrauerClassRep& c, const std::vector<Int>& x,
                                 const Place& v, std::pair<int, int> choice);

/// Br(X)/Br(Q) for a split pencil from its five discriminant classes,
/// via the kernel-of-o description.  Requires a complete vector whose
/// product is a square.
BrauerGroupInfo br_group_diagonal(const DiscriminantVector& d);

/// Fact 2.4: three rational scheme points with equal non-square classes.
bool order4_criterion(const Pencil& p);

/// Fact 2.5.a for classes[i] = classes[j] = D non-square: the represented
/// class is trivial iff the remaining three classes are squares.
bool triviality_criterion(const DiscriminantVector& d, size_t i = 0, size_t j = 1);

/// Whether the place splits in Q(sqrt(D)); at infinity this means D > 0.
bool place_splits_in(const SquareClass& D, const Place& v);

/// First applicable constancy certificate at v, or nullopt.
/// params enables the ramified-congruence test of the family theorem.
std::optional<ConstancyCertificate> constancy_certificate(
    const BrauerClassRep& c, const Place& v,
    const std::optional<FamilyParams>& params = std::nullopt);

/// i_alpha(sigma) for a family-surface class and a sign automorphism.
WitnessComponent witness_components(const BrauerClassRep& c, const FamilyParams& params,
                                    const SignAutomorphism& sigma);

/// A witness automorphism with nontrivial component at v, together with the
/// local point-existence certificate, or nullopt when no generator works.
std::optional<WitnessProof> nonconstancy_by_witness(const BrauerClassRep& c,
                                                    const FamilyParams& params, const Place& v);

}  // namespace dp4
