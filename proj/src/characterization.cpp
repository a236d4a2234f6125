#include "maxenergy/characterization.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "maxenergy/errors.hpp"
#include "maxenergy/spectra.hpp"
#include "maxenergy/textio.hpp"

namespace maxenergy {

namespace {

double spectrum_sum(const SingularSpectrum& s) {
    double e = 0.0;
    for (double v : s.values) e += v;
    return e;
}

// ceil/floor with a small guard against binary64 artifacts like
// 0.1 * 30 = 3.0000000000000004.
std::size_t guarded_ceil(double x) {
    return static_cast<std::size_t>(std::ceil(x - 1e-9));
}
std::size_t guarded_floor(double x) {
    return static_cast<std::size_t>(std::floor(x + 1e-9));
}

}  // namespace

CharacterizationReport grade_near_maximal(const RealMatrix& a, double epsilon,
                                          double delta) {
    if (!a.is_square()) throw DimensionError("grading requires a square matrix");
    if (!a.is_nonnegative()) throw DomainError("matrix must be nonnegative");
    if (!(epsilon > 0.0 && epsilon < 0.5))
        throw PreconditionError("epsilon must lie in (0, 1/2)");
    if (!(delta > 0.0 && delta < 0.5))
        throw PreconditionError("delta must lie in (0, 1/2)");

    const EntrywiseNorms norms = entrywise_norms(a);
    if (norms.max_abs == 0.0) throw DomainError("zero matrix has no maximum entry");

    const std::size_t n = a.rows();
    const double nd = static_cast<double>(n);
    const double alpha = norms.max_abs;

    CharacterizationReport rep;
    rep.n = n;
    rep.epsilon = epsilon;
    rep.delta = delta;
    rep.alpha = alpha;

    const SingularSpectrum sv = singular_values(a);
    rep.energy = spectrum_sum(sv);
    rep.hypothesis_threshold = alpha * (0.5 - delta) * std::pow(nd, 1.5);
    rep.hypothesis_met = rep.energy >= rep.hypothesis_threshold;
    rep.alpha_exceeds_2eps = alpha > 2.0 * epsilon;

    const double count_threshold = (0.5 - epsilon) * nd * nd;
    std::size_t dominant = 0, small = 0;
    for (double v : a.data()) {
        if (v > (1.0 - epsilon) * alpha) ++dominant;
        if (v < epsilon * alpha) ++small;
    }
    rep.cond_i = {static_cast<double>(dominant), count_threshold,
                  static_cast<double>(dominant) >= count_threshold};
    rep.cond_ii = {static_cast<double>(small), count_threshold,
                   static_cast<double>(small) >= count_threshold};

    const double sigma1 = sv.values[0];
    const double sigma2 = (n >= 2) ? sv.values[1] : 0.0;
    rep.cond_iii = {std::fabs(sigma1 - alpha * nd / 2.0), epsilon * alpha * nd, false};
    rep.cond_iii.passed = rep.cond_iii.value < rep.cond_iii.threshold;
    rep.cond_iv = {sigma2, epsilon * alpha * nd, sigma2 < epsilon * alpha * nd};

    rep.cond_v_index_lo = guarded_ceil(epsilon * nd);
    rep.cond_v_index_hi = std::min(guarded_floor((1.0 - epsilon) * nd), n);
    const double bulk_center = alpha * std::sqrt(nd) / 2.0;
    double max_dev = 0.0;
    for (std::size_t i = std::max<std::size_t>(rep.cond_v_index_lo, 1);
         i <= rep.cond_v_index_hi; ++i) {
        const double dev = std::fabs(sv.values[i - 1] - bulk_center);
        if (dev > max_dev) max_dev = dev;
    }
    // An empty index window passes vacuously with deviation 0.
    rep.cond_v = {max_dev, epsilon * alpha * std::sqrt(nd),
                  max_dev < epsilon * alpha * std::sqrt(nd)};
    return rep;
}

double complement_energy(const RealMatrix& a) {
    if (!a.is_square())
        throw DimensionError("complement energy requires a square matrix");
    if (!a.is_nonnegative()) throw DomainError("matrix must be nonnegative");
    if (!a.is_finite()) throw DomainError("matrix has non-finite entries");
    const std::size_t n = a.rows();
    RealMatrix c(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (a(i, j) > 1.0)
                throw DomainError("entries must be at most 1 for the complement");
            c(i, j) = 1.0 - a(i, j);
        }
    return energy(c);
}

ComplementEnergyCheck complement_energy_check(const RealMatrix& a, double epsilon,
                                              double delta) {
    ComplementEnergyCheck chk;
    chk.complement_energy = complement_energy(a);  // validates the input
    chk.energy = energy(a);
    const double n32 = std::pow(static_cast<double>(a.rows()), 1.5);
    chk.premise_threshold = (0.5 - delta) * n32;
    chk.conclusion_threshold = (0.5 - epsilon) * n32;
    chk.premise = chk.energy >= chk.premise_threshold;
    chk.conclusion = chk.complement_energy >= chk.conclusion_threshold;
    return chk;
}

namespace {

void condition_text(std::ostringstream& out, const char* name,
                    const ConditionReport& c) {
    out << name << "_value: " << fmt_sig(c.value, 12) << '\n';
    out << name << "_threshold: " << fmt_sig(c.threshold, 12) << '\n';
    out << name << "_pass: " << bool_str(c.passed) << '\n';
}

std::string condition_json(const ConditionReport& c) {
    JsonWriter w;
    w.begin()
        .field("value", c.value)
        .field("threshold", c.threshold)
        .field("pass", c.passed)
        .end();
    return w.str();
}

}  // namespace

std::string CharacterizationReport::to_text() const {
    std::ostringstream out;
    out << "n: " << n << '\n';
    out << "epsilon: " << fmt_sig(epsilon, 12) << '\n';
    out << "delta: " << fmt_sig(delta, 12) << '\n';
    out << "alpha: " << fmt_sig(alpha, 12) << '\n';
    out << "energy: " << fmt_sig(energy, 12) << '\n';
    out << "hypothesis_threshold: " << fmt_sig(hypothesis_threshold, 12) << '\n';
    out << "hypothesis_met: " << bool_str(hypothesis_met) << '\n';
    out << "alpha_exceeds_2eps: " << bool_str(alpha_exceeds_2eps) << '\n';
    condition_text(out, "cond_i", cond_i);
    condition_text(out, "cond_ii", cond_ii);
    condition_text(out, "cond_iii", cond_iii);
    condition_text(out, "cond_iv", cond_iv);
    condition_text(out, "cond_v", cond_v);
    out << "cond_v_index_lo: " << cond_v_index_lo << '\n';
    out << "cond_v_index_hi: " << cond_v_index_hi << '\n';
    return out.str();
}

std::string CharacterizationReport::to_json() const {
    JsonWriter w;
    w.begin()
        .field("n", std::uint64_t{n})
        .field("epsilon", epsilon)
        .field("delta", delta)
        .field("alpha", alpha)
        .field("energy", energy)
        .field("hypothesis_threshold", hypothesis_threshold)
        .field("hypothesis_met", hypothesis_met)
        .field("alpha_exceeds_2eps", alpha_exceeds_2eps)
        .field_raw("cond_i", condition_json(cond_i))
        .field_raw("cond_ii", condition_json(cond_ii))
        .field_raw("cond_iii", condition_json(cond_iii))
        .field_raw("cond_iv", condition_json(cond_iv))
        .field_raw("cond_v", condition_json(cond_v))
        .field("cond_v_index_lo", std::uint64_t{cond_v_index_lo})
        .field("cond_v_index_hi", std::uint64_t{cond_v_index_hi})
        .end();
    return w.str();
}

}  // namespace maxenergy
