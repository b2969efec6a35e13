#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "frameposet/linalg.hpp"
#include "frameposet/scalar.hpp"

namespace frameposet {

enum class Field { Real, Complex };

// Scalar mode of a frame: exact over Q (d == 1), Q(sqrt(d)), or Q(i) in the
// complex field — or plain doubles.
struct ScalarMode {
    bool exact = true;
    long long d = 1;  // square-free; 1 means no quadratic extension

    static ScalarMode exact_mode(long long d = 1) { return {true, d}; }
    static ScalarMode float_mode() { return {false, 1}; }
    bool operator==(const ScalarMode&) const = default;
};

/// An ordered list of k vectors in dimension n over a declared field. The
/// type holds arbitrary vector sequences; being a frame (spanning) is a
/// checkable predicate, not an invariant.
struct Frame {
    Field field = Field::Real;
    int n = 0;
    ScalarMode mode = ScalarMode::exact_mode();
    std::vector<std::vector<Scalar>> vectors;  // k entries, each of length n

    int k() const { return static_cast<int>(vectors.size()); }
};

/// Checks dimensions and that every entry matches the declared field and
/// scalar mode. Throws ValidationError / MixedModeError.
void validate_frame(const Frame& f);

bool is_zero_vector(const Frame& f, int index, const Tolerance& tol = {});

/// Indices (1-based) of zero vectors.
std::vector<int> zero_vector_indices(const Frame& f, const Tolerance& tol = {});

/// Copy of the frame with zero vectors removed (the explicit opt-in the
/// default rejection pairs with). Indices shift down.
Frame strip_zero_vectors(const Frame& f, const Tolerance& tol = {});

/// Componentwise-rescaled diagram vector: per pair (i, j), i < j in
/// lexicographic order, the difference f(i)^2 - f(j)^2 (|.|^2 in the complex
/// field) and the product f(i) f(j) (f(i) conj(f(j)) in the complex field,
/// stored once per unordered pair). Dropping the positive constants of the
/// full diagram vector preserves zero-sum and parallelism tests exactly.
struct ReducedDiagramVector {
    std::vector<Scalar> diffs;  // C(n,2) entries
    std::vector<Scalar> prods;  // C(n,2) entries

    int coord_count() const { return static_cast<int>(diffs.size() + prods.size()); }
    // Flattened coordinate access: diffs first, then prods.
    const Scalar& coord(int i) const {
        const int nd = static_cast<int>(diffs.size());
        return i < nd ? diffs[i] : prods[i - nd];
    }
};

ReducedDiagramVector diagram_vector(const std::vector<Scalar>& f, Field field, int n);
ReducedDiagramVector diagram_vector(const Frame& f, int index);
std::vector<ReducedDiagramVector> diagram_vectors(const Frame& f);

/// Full diagram vector in floating point, constants included; used by the
/// norm/inner-product identity checks only. Real: n(n-1) real coordinates.
/// Complex: 3n(n-1)/2 complex coordinates.
std::vector<std::complex<double>> full_diagram_float(const std::vector<Scalar>& f,
                                                     Field field, int n);

struct FrameOperatorReport {
    Matrix S;  // n x n
    bool is_tight = false;
    std::optional<Scalar> tight_bound;  // lambda with S = lambda I, when tight
};

FrameOperatorReport frame_operator(const Frame& f, const Tolerance& tol = {});

/// True iff the vectors indexed by J (1-based bitmask) have reduced diagram
/// vectors summing to zero. Throws on empty J and on an all-zero subset (the
/// tightness criterion assumes not all vectors are zero).
bool subset_is_tight(const Frame& f, std::uint64_t subset_mask, const Tolerance& tol = {});

bool spans_space(const Frame& f, const Tolerance& tol = {});

/// Size of the smallest linearly dependent subset; n+1 when every n-subset
/// is a basis. Requires a spanning input.
int spark(const Frame& f, const Tolerance& tol = {});
bool is_full_spark(const Frame& f, const Tolerance& tol = {});

/// Frame converted entrywise to float mode (identity on float frames).
Frame to_float_frame(const Frame& f);

int pair_count(int n);  // C(n,2)

} // namespace frameposet
