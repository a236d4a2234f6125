#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maxenergy/matrix.hpp"

namespace maxenergy {

/// One evaluated bound against a measured energy. slack is value - energy
/// for upper bounds and energy - value for lower bounds; satisfied is empty
/// ("not evaluated") whenever applicable is false.
struct BoundReport {
    std::string name;
    double value = 0.0;
    double subject_energy = 0.0;
    bool is_upper = true;
    bool applicable = true;
    double slack = 0.0;
    std::optional<bool> satisfied;
};

/// Fills slack/satisfied with the hybrid tolerance
/// slack >= -1e-8 * max(1, |value|).
BoundReport make_bound_report(std::string name, double value, double subject_energy,
                              bool is_upper, bool applicable);

/// (n/2)(1 + sqrt(n)): upper bound on the energy of any graph of order n.
double koolen_moulton_bound(std::size_t n);

/// (alpha/2)(m + sqrt(m)) sqrt(n): upper bound on the energy of a
/// nonnegative m x n matrix with maximum entry alpha, m <= n.
double matrix_energy_upper(std::size_t m, std::size_t n, double alpha);

/// ||A||_1/sqrt(mn) + sqrt((m-1)(||A||_2^2 - ||A||_1^2/(mn))) for a
/// nonnegative m x n matrix, m <= n; applicable only when ||A||_1 >= n*alpha.
BoundReport refined_upper(const RealMatrix& a);

/// sigma1 + (2e - sigma1^2)/sigma2: lower bound on graph energy when
/// e > 0 and sigma2 > 0. For a general matrix pass e = frob_sq / 2.
double energy_lower(double sigma1, double sigma2, double e);

/// (p-1)/2 + (p(p-1)/2 - (p-1)^2/4) / ((sqrt(p)+1)/2), the energy floor of
/// the Paley graph of order p; exceeds p^{3/2}/2 for every prime
/// p == 1 (mod 4) with p > 11.
double paley_energy_floor(std::uint64_t p);

struct ChainStep {
    std::string label;
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = true;  // lhs <= rhs + 1e-8 * scale
};

/// Step-by-step diagnostic of the chained upper bounds on the energy of a
/// nonnegative square matrix. Values are reported after rescaling the input
/// by 1/alpha so that the maximum entry is 1; alpha records the factor.
struct ChainDiagnostic {
    double alpha = 1.0;
    std::size_t n = 0;
    double subject_energy = 0.0;  // energy of the rescaled matrix
    std::vector<ChainStep> steps;
};

/// Evaluates, in rescaled units:
///   E <= sqrt(n ||A||_2^2)                                   (rms_bound)
///   E <= s1 + sqrt((n-1)(||A||_2^2 - s1^2))                  (sigma1_split)
///     <= ||A||_1/n + sqrt((n-1)(||A||_2^2 - ||A||_1^2/n^2))  (l1_substitution)
///     <= ||A||_1/n + sqrt((n-1)(||A||_1 - ||A||_1^2/n^2))    (frob_to_l1)
///     <= (n/2)(sqrt(n) + 1)                                  (koolen_moulton_form)
/// and, for n >= 2,
///   E <= s1 + s2 + sqrt((n-2)(||A||_1 - s1^2 - s2^2))        (two_sigma_split).
/// The middle substitutions require ||A||_1 >= n in rescaled units; steps
/// are reported unconditionally with their measured sides.
ChainDiagnostic energy_bound_chain(const RealMatrix& a);

}  // namespace maxenergy
