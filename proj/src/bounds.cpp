#include "maxenergy/bounds.hpp"

#include <cmath>

#include "maxenergy/errors.hpp"
#include "maxenergy/number_theory.hpp"
#include "maxenergy/spectra.hpp"

namespace maxenergy {

namespace {

// Radicands of the chained bounds are nonnegative in exact arithmetic;
// absorb roundoff up to 1e-10 * scale, reject anything worse.
double checked_radicand(double v, double scale) {
    if (v < 0.0) {
        if (v < -1e-10 * std::max(1.0, scale))
            throw NumericError("bound radicand significantly negative");
        return 0.0;
    }
    return v;
}

bool step_holds(double lhs, double rhs) {
    const double scale = std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
    return lhs <= rhs + 1e-8 * scale;
}

}  // namespace

BoundReport make_bound_report(std::string name, double value, double subject_energy,
                              bool is_upper, bool applicable) {
    BoundReport r;
    r.name = std::move(name);
    r.value = value;
    r.subject_energy = subject_energy;
    r.is_upper = is_upper;
    r.applicable = applicable;
    r.slack = is_upper ? value - subject_energy : subject_energy - value;
    if (applicable)
        r.satisfied = r.slack >= -1e-8 * std::max(1.0, std::fabs(value));
    return r;
}

double koolen_moulton_bound(std::size_t n) {
    if (n == 0) throw PreconditionError("order must be at least 1");
    const double nd = static_cast<double>(n);
    return (nd / 2.0) * (1.0 + std::sqrt(nd));
}

double matrix_energy_upper(std::size_t m, std::size_t n, double alpha) {
    if (m == 0 || n == 0) throw PreconditionError("dimensions must be at least 1");
    if (m > n) throw PreconditionError("requires m <= n; transpose the input");
    if (!(alpha > 0.0)) throw PreconditionError("alpha must be positive");
    const double md = static_cast<double>(m);
    const double nd = static_cast<double>(n);
    return (alpha / 2.0) * (md + std::sqrt(md)) * std::sqrt(nd);
}

BoundReport refined_upper(const RealMatrix& a) {
    if (!a.is_nonnegative()) throw DomainError("matrix must be nonnegative");
    if (a.rows() > a.cols())
        throw PreconditionError("requires m <= n; transpose the input");
    const EntrywiseNorms norms = entrywise_norms(a);
    const double md = static_cast<double>(a.rows());
    const double nd = static_cast<double>(a.cols());
    const double mn = md * nd;
    const double rad =
        checked_radicand(norms.frob_sq - norms.l1 * norms.l1 / mn, norms.frob_sq);
    const double value =
        norms.l1 / std::sqrt(mn) + std::sqrt((md - 1.0) * rad);
    const bool applicable = norms.l1 >= nd * norms.max_abs;
    return make_bound_report("refined_upper", value, energy(a), true, applicable);
}

double energy_lower(double sigma1, double sigma2, double e) {
    if (!(sigma2 > 0.0)) throw PreconditionError("sigma2 must be positive");
    if (!(e > 0.0)) throw PreconditionError("edge count must be positive");
    return sigma1 + (2.0 * e - sigma1 * sigma1) / sigma2;
}

double paley_energy_floor(std::uint64_t p) {
    if (!is_prime(p) || p % 4 != 1)
        throw DomainError("requires a prime p == 1 (mod 4)");
    if (p <= 11) throw PreconditionError("requires p > 11");
    const double pd = static_cast<double>(p);
    const double sigma1 = (pd - 1.0) / 2.0;
    const double sigma2 = (std::sqrt(pd) + 1.0) / 2.0;
    const double twice_edges = pd * (pd - 1.0) / 2.0;
    return sigma1 + (twice_edges - sigma1 * sigma1) / sigma2;
}

ChainDiagnostic energy_bound_chain(const RealMatrix& a) {
    if (!a.is_square()) throw DimensionError("chain requires a square matrix");
    if (!a.is_nonnegative()) throw DomainError("matrix must be nonnegative");
    const EntrywiseNorms raw = entrywise_norms(a);
    if (raw.max_abs == 0.0) throw PreconditionError("chain requires a nonzero matrix");

    const std::size_t n = a.rows();
    const double nd = static_cast<double>(n);
    const double alpha = raw.max_abs;

    RealMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b(i, j) = a(i, j) / alpha;

    const EntrywiseNorms norms = entrywise_norms(b);
    const SingularSpectrum sv = singular_values(b);
    double e = 0.0;
    for (double v : sv.values) e += v;
    const double s1 = sv.values[0];
    const double s2 = (n >= 2) ? sv.values[1] : 0.0;
    const double l1 = norms.l1;
    const double frob = norms.frob_sq;

    ChainDiagnostic diag;
    diag.alpha = alpha;
    diag.n = n;
    diag.subject_energy = e;

    auto push = [&diag](const std::string& label, double lhs, double rhs) {
        diag.steps.push_back({label, lhs, rhs, step_holds(lhs, rhs)});
    };

    const double rms = std::sqrt(nd * frob);
    push("rms_bound", e, rms);

    const double r1 = s1 + std::sqrt((nd - 1.0) * checked_radicand(frob - s1 * s1, frob));
    push("sigma1_split", e, r1);

    const double mean = l1 / nd;
    const double r2 =
        mean + std::sqrt((nd - 1.0) * checked_radicand(frob - mean * mean, frob));
    push("l1_substitution", r1, r2);

    const double r3 =
        mean + std::sqrt((nd - 1.0) * checked_radicand(l1 - mean * mean, l1));
    push("frob_to_l1", r2, r3);

    const double r4 = (nd / 2.0) * (std::sqrt(nd) + 1.0);
    push("koolen_moulton_form", r3, r4);

    if (n >= 2) {
        const double r5 =
            s1 + s2 +
            std::sqrt((nd - 2.0) * checked_radicand(l1 - s1 * s1 - s2 * s2, l1));
        push("two_sigma_split", e, r5);
    }
    return diag;
}

}  // namespace maxenergy
