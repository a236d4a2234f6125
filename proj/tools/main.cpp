// Command-line front end: energy, paley, construct, bounds, grade, sweep.
// Exit codes: 0 success, 1 certification failure (construct/sweep),
// 2 input or usage error.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "maxenergy/bounds.hpp"
#include "maxenergy/characterization.hpp"
#include "maxenergy/construction.hpp"
#include "maxenergy/errors.hpp"
#include "maxenergy/graph.hpp"
#include "maxenergy/matrix.hpp"
#include "maxenergy/number_theory.hpp"
#include "maxenergy/spectra.hpp"
#include "maxenergy/textio.hpp"

namespace me = maxenergy;

namespace {

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    throw me::DomainError("unknown format '" + s + "'");
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw me::Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Input {
    std::optional<me::Graph> graph;
    std::optional<me::RealMatrix> matrix;
};

// First content line "a b": a graph header needs b <= a(a-1)/2; when that
// holds, try the edge-list grammar first and fall back to the matrix one.
// The --as override skips the heuristic entirely.
Input load_input(const std::string& path, const std::string& as) {
    const std::string text = read_input(path);
    Input input;
    if (as == "graph") {
        input.graph = me::parse_graph(text);
        return input;
    }
    if (as == "matrix") {
        input.matrix = me::parse_matrix(text);
        return input;
    }

    bool graph_plausible = false;
    {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            std::istringstream ls(line);
            std::string t0;
            if (!(ls >> t0)) continue;
            if (t0[0] == '#') continue;
            std::string t1, t2;
            if ((ls >> t1) && !(ls >> t2)) {
                unsigned long long a = 0, b = 0;
                try {
                    a = std::stoull(t0);
                    b = std::stoull(t1);
                    graph_plausible = (a >= 1) && (b <= a * (a - 1) / 2);
                } catch (...) {
                    graph_plausible = false;
                }
            }
            break;
        }
    }
    if (graph_plausible) {
        try {
            input.graph = me::parse_graph(text);
            return input;
        } catch (const me::ParseError&) {
            // fall through to the matrix grammar
        }
    }
    input.matrix = me::parse_matrix(text);
    return input;
}

void print_spectrum_text(std::ostream& out, const std::vector<double>& v, int sig) {
    out << "spectrum:";
    for (double x : v) out << ' ' << me::fmt_sig(x, sig);
    out << '\n';
}

int cmd_energy(const std::string& path, const std::string& as, Format format) {
    const Input input = load_input(path, as);
    double e = 0.0;
    std::vector<double> spectrum;
    if (input.graph) {
        const me::Graph& g = *input.graph;
        const me::EigenSpectrum eig = me::symmetric_eigenvalues(me::adjacency_matrix(g));
        spectrum = eig.values;
        for (double v : spectrum) e += std::fabs(v);
        if (format == Format::Json) {
            me::JsonWriter w;
            w.begin()
                .field("kind", "graph")
                .field("order", std::uint64_t{g.order()})
                .field("edges", std::uint64_t{g.edge_count()})
                .field("energy", e)
                .field_numbers("spectrum", spectrum)
                .end();
            std::cout << w.str() << '\n';
        } else {
            std::cout << "kind: graph\n";
            std::cout << "order: " << g.order() << '\n';
            std::cout << "edges: " << g.edge_count() << '\n';
            std::cout << "energy: " << me::fmt_sig(e, 6) << '\n';
            print_spectrum_text(std::cout, spectrum, 6);
        }
    } else {
        const me::RealMatrix& a = *input.matrix;
        const me::SingularSpectrum sv = me::singular_values(a);
        spectrum = sv.values;
        for (double v : spectrum) e += v;
        if (format == Format::Json) {
            me::JsonWriter w;
            w.begin()
                .field("kind", "matrix")
                .field("rows", std::uint64_t{a.rows()})
                .field("cols", std::uint64_t{a.cols()})
                .field("energy", e)
                .field_numbers("spectrum", spectrum)
                .end();
            std::cout << w.str() << '\n';
        } else {
            std::cout << "kind: matrix\n";
            std::cout << "rows: " << a.rows() << '\n';
            std::cout << "cols: " << a.cols() << '\n';
            std::cout << "energy: " << me::fmt_sig(e, 6) << '\n';
            print_spectrum_text(std::cout, spectrum, 6);
        }
    }
    return 0;
}

int cmd_paley(std::uint64_t p, Format format) {
    const me::Graph g = me::paley_graph(p);
    const me::EigenSpectrum eig = me::symmetric_eigenvalues(me::adjacency_matrix(g));
    double e = 0.0;
    std::vector<double> abs_sorted;
    abs_sorted.reserve(eig.values.size());
    for (double v : eig.values) {
        e += std::fabs(v);
        abs_sorted.push_back(std::fabs(v));
    }
    std::sort(abs_sorted.begin(), abs_sorted.end(), std::greater<>());
    const double sigma2 = abs_sorted.size() >= 2 ? abs_sorted[1] : 0.0;
    if (format == Format::Json) {
        me::JsonWriter w;
        std::ostringstream edges;
        edges << '[';
        bool first = true;
        for (std::size_t u = 0; u < g.order(); ++u)
            for (std::size_t v = u + 1; v < g.order(); ++v)
                if (g.has_edge(u, v)) {
                    edges << (first ? "" : ",") << '[' << u << ',' << v << ']';
                    first = false;
                }
        edges << ']';
        w.begin()
            .field("p", p)
            .field("order", std::uint64_t{g.order()})
            .field("edge_count", std::uint64_t{g.edge_count()})
            .field_raw("edges", edges.str())
            .field("energy", e)
            .field("sigma2", sigma2)
            .field_numbers("spectrum", eig.values)
            .end();
        std::cout << w.str() << '\n';
    } else {
        // Plain edge-list output; the appended '#' lines keep the whole
        // stream parsable as a graph file (e.g. piped into `energy -`).
        std::cout << me::serialize_graph(g);
        std::cout << "# energy: " << me::fmt_sig(e, 12) << '\n';
        std::cout << "# sigma2: " << me::fmt_sig(sigma2, 12) << '\n';
        std::cout << "# spectrum:";
        for (double v : eig.values) std::cout << ' ' << me::fmt_sig(v, 12);
        std::cout << '\n';
    }
    return 0;
}

int cmd_construct(std::size_t n, std::uint64_t seed, std::size_t budget,
                  Format format) {
    const me::ConstructionReport rep = me::construct_max_energy_graph(n, seed, budget);
    if (format == Format::Json)
        std::cout << rep.to_json() << '\n';
    else
        std::cout << rep.to_text();
    return rep.certified ? 0 : 1;
}

std::string bound_text(const me::BoundReport& b) {
    std::ostringstream out;
    out << "bound " << b.name << ": value=" << me::fmt_sig(b.value, 12)
        << " direction=" << (b.is_upper ? "upper" : "lower")
        << " applicable=" << me::bool_str(b.applicable) << " satisfied="
        << (b.satisfied ? me::bool_str(*b.satisfied) : "not_evaluated")
        << " slack=" << me::fmt_sig(b.slack, 12);
    return out.str();
}

std::string bound_json(const me::BoundReport& b) {
    me::JsonWriter w;
    w.begin()
        .field("name", b.name)
        .field("value", b.value)
        .field("subject_energy", b.subject_energy)
        .field("direction", b.is_upper ? "upper" : "lower")
        .field("applicable", b.applicable);
    if (b.satisfied)
        w.field("satisfied", *b.satisfied);
    else
        w.field_null("satisfied");
    w.field("slack", b.slack).end();
    return w.str();
}

int cmd_bounds(const std::string& path, const std::string& as, Format format) {
    const Input input = load_input(path, as);
    const bool is_graph = input.graph.has_value();
    me::RealMatrix a = is_graph ? me::adjacency_matrix(*input.graph)
                                : *input.matrix;
    if (a.rows() > a.cols()) a = a.transposed();  // energy is transpose-invariant

    const me::EntrywiseNorms norms = me::entrywise_norms(a);
    const me::SingularSpectrum sv = me::singular_values(a);
    double e = 0.0;
    for (double v : sv.values) e += v;
    const double sigma1 = sv.values[0];
    const double sigma2 = sv.values.size() >= 2 ? sv.values[1] : 0.0;
    const bool nonneg = a.is_nonnegative();

    std::vector<me::BoundReport> reports;
    if (is_graph)
        reports.push_back(me::make_bound_report(
            "koolen_moulton", me::koolen_moulton_bound(a.rows()), e, true, true));
    if (nonneg && norms.max_abs > 0.0)
        reports.push_back(me::make_bound_report(
            "max_entry_upper",
            me::matrix_energy_upper(a.rows(), a.cols(), norms.max_abs), e, true, true));
    if (nonneg) reports.push_back(me::refined_upper(a));
    {
        const double half_frob = norms.frob_sq / 2.0;
        const bool lower_ok = sigma2 > 0.0 && half_frob > 0.0;
        const double value =
            lower_ok ? me::energy_lower(sigma1, sigma2, half_frob) : 0.0;
        reports.push_back(
            me::make_bound_report("energy_lower", value, e, false, lower_ok));
    }

    std::optional<me::ChainDiagnostic> chain;
    if (nonneg && a.is_square() && norms.max_abs > 0.0)
        chain = me::energy_bound_chain(a);

    if (format == Format::Json) {
        me::JsonWriter w;
        w.begin()
            .field("kind", is_graph ? "graph" : "matrix")
            .field("rows", std::uint64_t{a.rows()})
            .field("cols", std::uint64_t{a.cols()})
            .field("energy", e);
        std::ostringstream arr;
        arr << '[';
        for (std::size_t i = 0; i < reports.size(); ++i)
            arr << (i ? "," : "") << bound_json(reports[i]);
        arr << ']';
        w.field_raw("bounds", arr.str());
        if (chain) {
            me::JsonWriter cw;
            cw.begin()
                .field("alpha", chain->alpha)
                .field("subject_energy", chain->subject_energy);
            std::ostringstream steps;
            steps << '[';
            for (std::size_t i = 0; i < chain->steps.size(); ++i) {
                const me::ChainStep& s = chain->steps[i];
                me::JsonWriter sw;
                sw.begin()
                    .field("label", s.label)
                    .field("lhs", s.lhs)
                    .field("rhs", s.rhs)
                    .field("holds", s.holds)
                    .end();
                steps << (i ? "," : "") << sw.str();
            }
            steps << ']';
            cw.field_raw("steps", steps.str()).end();
            w.field_raw("chain", cw.str());
        } else {
            w.field_null("chain");
        }
        w.end();
        std::cout << w.str() << '\n';
    } else {
        std::cout << "kind: " << (is_graph ? "graph" : "matrix") << '\n';
        std::cout << "rows: " << a.rows() << '\n';
        std::cout << "cols: " << a.cols() << '\n';
        std::cout << "energy: " << me::fmt_sig(e, 12) << '\n';
        for (const auto& b : reports) std::cout << bound_text(b) << '\n';
        std::cout << "chain_applicable: " << me::bool_str(chain.has_value()) << '\n';
        if (chain) {
            std::cout << "chain_alpha: " << me::fmt_sig(chain->alpha, 12) << '\n';
            for (const auto& s : chain->steps)
                std::cout << "chain step " << s.label
                          << ": lhs=" << me::fmt_sig(s.lhs, 12)
                          << " rhs=" << me::fmt_sig(s.rhs, 12)
                          << " holds=" << me::bool_str(s.holds) << '\n';
        }
    }
    return 0;
}

int cmd_grade(const std::string& path, const std::string& as, double epsilon,
              double delta, Format format) {
    const Input input = load_input(path, as);
    const me::RealMatrix a =
        input.graph ? me::adjacency_matrix(*input.graph) : *input.matrix;
    const me::CharacterizationReport rep = me::grade_near_maximal(a, epsilon, delta);

    const bool complement_ok = rep.alpha <= 1.0;
    std::optional<me::ComplementEnergyCheck> chk;
    if (complement_ok) chk = me::complement_energy_check(a, epsilon, delta);

    if (format == Format::Json) {
        // Reuse the report body and append the complement fields.
        std::string body = rep.to_json();
        body.pop_back();  // trailing '}'
        std::ostringstream out;
        out << body << ",\"complement_applicable\":" << me::bool_str(complement_ok);
        if (chk) {
            out << ",\"complement_premise\":" << me::bool_str(chk->premise)
                << ",\"complement_conclusion\":" << me::bool_str(chk->conclusion)
                << ",\"complement_energy\":" << me::fmt_sig(chk->complement_energy, 12)
                << ",\"complement_premise_threshold\":"
                << me::fmt_sig(chk->premise_threshold, 12)
                << ",\"complement_conclusion_threshold\":"
                << me::fmt_sig(chk->conclusion_threshold, 12);
        }
        out << '}';
        std::cout << out.str() << '\n';
    } else {
        std::cout << rep.to_text();
        std::cout << "complement_applicable: " << me::bool_str(complement_ok) << '\n';
        if (chk) {
            std::cout << "complement_premise: " << me::bool_str(chk->premise) << '\n';
            std::cout << "complement_conclusion: " << me::bool_str(chk->conclusion)
                      << '\n';
            std::cout << "complement_energy: "
                      << me::fmt_sig(chk->complement_energy, 12) << '\n';
        }
    }
    return 0;
}

int cmd_sweep(std::size_t n_min, std::size_t n_max, std::size_t step,
              std::uint64_t seed, Format format) {
    if (n_min < 4) throw me::PreconditionError("sweep requires n_min >= 4");
    if (n_max < n_min) throw me::PreconditionError("sweep requires n_max >= n_min");
    if (step == 0) throw me::PreconditionError("step must be at least 1");

    bool all_certified = true;
    std::vector<me::ConstructionReport> rows;
    for (std::size_t n = n_min; n <= n_max; n += step) {
        rows.push_back(me::construct_max_energy_graph(n, seed));
        all_certified = all_certified && rows.back().certified;
    }

    if (format == Format::Json) {
        std::cout << '[';
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& r = rows[i];
            me::JsonWriter w;
            w.begin()
                .field("n", std::uint64_t{r.n})
                .field("p", r.p)
                .field("window_ok", r.window_ok)
                .field("energy", r.energy_achieved)
                .field("target", r.target)
                .field("km_bound", me::koolen_moulton_bound(r.n))
                .field("certified", r.certified)
                .end();
            std::cout << (i ? "," : "") << w.str();
        }
        std::cout << "]\n";
    } else {
        std::cout << "n,p,window_ok,energy,target,km_bound,certified\n";
        for (const auto& r : rows)
            std::cout << r.n << ',' << r.p << ',' << me::bool_str(r.window_ok) << ','
                      << me::fmt_sig(r.energy_achieved, 12) << ','
                      << me::fmt_sig(r.target, 12) << ','
                      << me::fmt_sig(me::koolen_moulton_bound(r.n), 12) << ','
                      << me::bool_str(r.certified) << '\n';
    }
    return all_certified ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph and matrix energy toolkit"};
    app.require_subcommand(1);
    std::string format_name = "text";
    app.add_option("--format", format_name, "output format: text, json or csv")
        ->capture_default_str();

    std::string path, as_kind;
    std::uint64_t p = 0, seed = 0;
    std::size_t n = 0, n_min = 0, n_max = 0, step = 1;
    std::size_t budget = me::kDefaultRestartBudget;
    double epsilon = 0.2, delta = 0.05;

    CLI::App* c_energy = app.add_subcommand("energy", "energy and spectrum of a file");
    c_energy->add_option("file", path, "graph or matrix file, '-' for stdin")
        ->required();
    c_energy->add_option("--as", as_kind, "force input kind: graph or matrix");

    CLI::App* c_paley = app.add_subcommand("paley", "emit a Paley graph and spectrum");
    c_paley->add_option("p", p, "prime order, p == 1 (mod 4)")->required();

    CLI::App* c_construct =
        app.add_subcommand("construct", "build a high-energy graph of order n");
    c_construct->add_option("n", n, "graph order, n >= 4")->required();
    c_construct->add_option("--seed", seed, "search seed")->capture_default_str();
    c_construct->add_option("--budget", budget, "search restarts")
        ->capture_default_str();

    CLI::App* c_bounds =
        app.add_subcommand("bounds", "evaluate every applicable energy bound");
    c_bounds->add_option("file", path, "graph or matrix file, '-' for stdin")
        ->required();
    c_bounds->add_option("--as", as_kind, "force input kind: graph or matrix");

    CLI::App* c_grade = app.add_subcommand(
        "grade", "grade a matrix against the near-maximal-energy conditions");
    c_grade->add_option("file", path, "graph or matrix file, '-' for stdin")
        ->required();
    c_grade->add_option("--as", as_kind, "force input kind: graph or matrix");
    c_grade->add_option("--epsilon", epsilon, "condition slack in (0, 1/2)")
        ->capture_default_str();
    c_grade->add_option("--delta", delta, "energy-hypothesis slack in (0, 1/2)")
        ->capture_default_str();

    CLI::App* c_sweep =
        app.add_subcommand("sweep", "construct for every n in [n_min, n_max]");
    c_sweep->add_option("n_min", n_min, "first order")->required();
    c_sweep->add_option("n_max", n_max, "last order")->required();
    c_sweep->add_option("--step", step, "stride")->capture_default_str();
    c_sweep->add_option("--seed", seed, "search seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!as_kind.empty() && as_kind != "graph" && as_kind != "matrix")
            throw me::DomainError("--as must be 'graph' or 'matrix'");
        const Format format = parse_format(format_name);
        if (c_energy->parsed()) return cmd_energy(path, as_kind, format);
        if (c_paley->parsed()) return cmd_paley(p, format);
        if (c_construct->parsed()) return cmd_construct(n, seed, budget, format);
        if (c_bounds->parsed()) return cmd_bounds(path, as_kind, format);
        if (c_grade->parsed()) return cmd_grade(path, as_kind, epsilon, delta, format);
        if (c_sweep->parsed()) return cmd_sweep(n_min, n_max, step, seed, format);
    } catch (const me::Error& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    }
    return 2;
}
