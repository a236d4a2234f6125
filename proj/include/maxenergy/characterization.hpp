#pragma once

#include <cstddef>
#include <string>

#include "maxenergy/matrix.hpp"

namespace maxenergy {

/// One measured condition: pass is value >= threshold for the counting
/// conditions and value < threshold for the spectral ones.
struct ConditionReport {
    double value = 0.0;
    double threshold = 0.0;
    bool passed = false;
};

/// Pass/fail and measured slack for the five structural conditions that
/// characterize nonnegative square matrices of near-maximal energy:
///   i   at least (1/2 - eps) n^2 entries exceed (1 - eps) alpha
///   ii  at least (1/2 - eps) n^2 entries are below eps alpha
///   iii |sigma1 - alpha n / 2| < eps alpha n
///   iv  sigma2 < eps alpha n
///   v   |sigma_i - alpha sqrt(n)/2| < eps alpha sqrt(n) for every
///       1-based index i in [ceil(eps n), floor((1 - eps) n)]
/// All measurements are reported even when the energy hypothesis fails.
struct CharacterizationReport {
    std::size_t n = 0;
    double epsilon = 0.0;
    double delta = 0.0;
    double alpha = 0.0;
    double energy = 0.0;
    double hypothesis_threshold = 0.0;  // alpha (1/2 - delta) n^{3/2}
    bool hypothesis_met = false;
    bool alpha_exceeds_2eps = false;
    ConditionReport cond_i;    // value = count of dominant entries
    ConditionReport cond_ii;   // value = count of near-zero entries
    ConditionReport cond_iii;  // value = |sigma1 - alpha n / 2|
    ConditionReport cond_iv;   // value = sigma2
    ConditionReport cond_v;    // value = max deviation over the index window
    std::size_t cond_v_index_lo = 0;  // 1-based window, lo > hi means empty
    std::size_t cond_v_index_hi = 0;

    std::string to_text() const;
    std::string to_json() const;
};

/// Grades a nonnegative square matrix with positive maximum entry against
/// the five conditions. Requires 0 < epsilon < 1/2 and 0 < delta < 1/2.
CharacterizationReport grade_near_maximal(const RealMatrix& a, double epsilon,
                                          double delta);

/// E(J - A) where J is the all-ones matrix of the same order. Requires a
/// nonnegative square matrix with entries <= 1 so that J - A stays
/// nonnegative.
double complement_energy(const RealMatrix& a);

/// Premise/conclusion pair of the complement-energy transfer for matrices
/// with entries in [0, 1]:
///   premise     E(A)     >= (1/2 - delta) n^{3/2}
///   conclusion  E(J - A) >= (1/2 - eps)   n^{3/2}
/// The implication itself is a corpus-level property; this only measures.
struct ComplementEnergyCheck {
    bool premise = false;
    bool conclusion = false;
    double energy = 0.0;
    double complement_energy = 0.0;
    double premise_threshold = 0.0;
    double conclusion_threshold = 0.0;
};

ComplementEnergyCheck complement_energy_check(const RealMatrix& a, double epsilon,
                                              double delta);

}  // namespace maxenergy
