#include "lpm/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "lpm/ehrhart.hpp"
#include "lpm/json_io.hpp"
#include "lpm/paths.hpp"
#include "lpm/polynomial.hpp"
#include "lpm/posets.hpp"
#include "lpm/shapes.hpp"

namespace lpm {

namespace {

constexpr int kOk = 0;
constexpr int kUsageError = 1;
constexpr int kInvalidShape = 2;
constexpr int kVerificationFailure = 3;

std::string csv_header(int degree) {
    std::string h;
    for (int d = 0; d <= degree; ++d) {
        if (d > 0) h += ",";
        h += "c" + std::to_string(d);
    }
    return h;
}

std::string csv_coeffs(const Polynomial& p, int degree) {
    std::string row;
    for (int d = 0; d <= degree; ++d) {
        if (d > 0) row += ",";
        row += p.coefficient(d).str();
    }
    return row;
}

struct EhrhartOptions {
    std::string shape;
    std::string method = "positive";
    std::string format = "text";
};

int cmd_ehrhart(const EhrhartOptions& opt, std::ostream& out) {
    const SkewShape shape = SkewShape::parse(opt.shape);
    if (opt.method == "all") {
        const EhrhartReport report = ehr_positive(shape);
        if (opt.format == "json") {
            out << report_json(report).dump(2) << "\n";
        } else if (opt.format == "csv") {
            const int deg = shape.ground_set_size() - 1;
            out << "method," << csv_header(deg) << "\n";
            out << "oracle," << csv_coeffs(report.by_oracle, deg) << "\n";
            out << "signed," << csv_coeffs(report.by_signed, deg) << "\n";
            out << "grouped," << csv_coeffs(report.by_grouped, deg) << "\n";
            out << "positive," << csv_coeffs(report.by_positive, deg) << "\n";
        } else {
            out << "shape:    " << shape.str() << "\n";
            out << "oracle:   " << report.by_oracle.str() << "\n";
            out << "signed:   " << report.by_signed.str() << "\n";
            out << "grouped:  " << report.by_grouped.str() << "\n";
            out << "positive: " << report.by_positive.str() << "\n";
            out << "agree:    " << (report.agree ? "yes" : "no") << "\n";
            out << "all coefficients positive: " << (report.positive ? "yes" : "no") << "\n";
        }
        return report.agree && report.positive ? kOk : kVerificationFailure;
    }
    Polynomial poly;
    if (opt.method == "oracle") {
        poly = ehr_oracle(shape);
    } else if (opt.method == "signed") {
        poly = ehr_signed(shape);
    } else if (opt.method == "grouped") {
        poly = ehr_grouped(shape);
    } else {
        poly = ehr_positive_total(shape);
    }
    if (opt.format == "json") {
        Json j{{"shape", shape_json(shape)},
               {"method", opt.method},
               {"polynomial", polynomial_json(poly)}};
        out << j.dump(2) << "\n";
    } else if (opt.format == "csv") {
        out << csv_header(poly.degree()) << "\n" << csv_coeffs(poly, poly.degree()) << "\n";
    } else {
        out << poly.str() << "\n";
    }
    return kOk;
}

struct TableOptions {
    std::string shape;
    std::string which;
    std::string format = "text";
};

int cmd_table(const TableOptions& opt, std::ostream& out) {
    const SkewShape shape = SkewShape::parse(opt.shape);
    const int deg = shape.ground_set_size() - 1;
    if (opt.which == "delannoy") {
        const auto paths = enumerate_delannoy(shape);
        Polynomial total;
        std::vector<std::pair<const DelannoyPath*, Polynomial>> rows;
        for (const auto& d : paths) {
            Polynomial p = ehr_snake(d);
            if (d.diagonals() % 2 == 0) {
                total += p;
            } else {
                total -= p;
            }
            rows.emplace_back(&d, std::move(p));
        }
        if (opt.format == "json") {
            Json arr = Json::array();
            for (const auto& [d, p] : rows) {
                arr.push_back(Json{{"path", d->step_word()},
                                   {"diagonals", d->diagonals()},
                                   {"sign", d->diagonals() % 2 == 0 ? 1 : -1},
                                   {"ehr", polynomial_json(p)}});
            }
            Json j{{"shape", shape_json(shape)},
                   {"rows", arr},
                   {"total", polynomial_json(total)}};
            out << j.dump(2) << "\n";
        } else if (opt.format == "csv") {
            out << "path,d,sign," << csv_header(deg) << "\n";
            for (const auto& [d, p] : rows) {
                out << d->step_word() << "," << d->diagonals() << ","
                    << (d->diagonals() % 2 == 0 ? "+" : "-") << "," << csv_coeffs(p, deg) << "\n";
            }
            out << "total,,," << csv_coeffs(total, deg) << "\n";
        } else {
            for (const auto& [d, p] : rows) {
                out << d->step_word() << "  d=" << d->diagonals() << "  "
                    << (d->diagonals() % 2 == 0 ? "+" : "-") << "  " << p.str() << "\n";
            }
            out << "total: " << total.str() << "\n";
        }
        return kOk;
    }
    if (opt.which == "grouped") {
        const EhrhartReport report = ehr_positive(shape);
        if (opt.format == "json") {
            Json arr = Json::array();
            for (const auto& w : report.witnesses) {
                arr.push_back(Json{{"path", w.path.step_word()},
                                   {"high_peaks", w.high_peaks.size()},
                                   {"ehr_pm", polynomial_json(w.ehr_pm)}});
            }
            Json j{{"shape", shape_json(shape)},
                   {"rows", arr},
                   {"total", polynomial_json(report.by_positive)}};
            out << j.dump(2) << "\n";
        } else if (opt.format == "csv") {
            out << "path,high_peaks," << csv_header(deg) << "\n";
            for (const auto& w : report.witnesses) {
                out << w.path.step_word() << "," << w.high_peaks.size() << ","
                    << csv_coeffs(w.ehr_pm, deg) << "\n";
            }
            out << "total,," << csv_coeffs(report.by_positive, deg) << "\n";
        } else {
            for (const auto& w : report.witnesses) {
                out << w.path.step_word() << "  hp=" << w.high_peaks.size() << "  "
                    << w.ehr_pm.str() << "\n";
            }
            out << "total: " << report.by_positive.str() << "\n";
        }
        return kOk;
    }
    // filters: one row per (path, order filter); gamma_min contributes its
    // single strip at argument t+1.
    const NEPath gmin = gamma_min(shape);
    struct Row {
        std::string path;
        std::string argument;
        std::string removed;
        std::string strip;
    };
    std::vector<Row> rows;
    for (const NEPath& gamma : enumerate_ne_paths(shape)) {
        if (gamma == gmin) {
            rows.push_back({gamma.step_word(), "t+1", "", ribbon_of(gamma).signature()});
            continue;
        }
        const RibbonShape ribbon = ribbon_of(gamma);
        const FencePoset fence(ribbon);
        const auto ideal = fence.ideal_generated_by(high_peaks(gamma, shape));
        std::vector<Cell> allowed;
        for (const Cell c : fence.elements()) {
            if (!std::binary_search(ideal.begin(), ideal.end(), c)) allowed.push_back(c);
        }
        for (const auto& filter : enumerate_filters(fence, allowed)) {
            std::string removed;
            for (const Cell c : filter) {
                if (!removed.empty()) removed += " ";
                removed += "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
            }
            rows.push_back({gamma.step_word(), "t", removed,
                            remove_filter(ribbon, filter).signature()});
        }
    }
    if (opt.format == "json") {
        Json arr = Json::array();
        for (const auto& r : rows) {
            arr.push_back(Json{{"path", r.path},
                               {"argument", r.argument},
                               {"removed", r.removed},
                               {"strip", r.strip}});
        }
        Json j{{"shape", shape_json(shape)}, {"rows", arr}};
        out << j.dump(2) << "\n";
    } else if (opt.format == "csv") {
        out << "path,argument,removed,strip\n";
        for (const auto& r : rows) {
            out << r.path << "," << r.argument << "," << r.removed << "," << r.strip << "\n";
        }
    } else {
        for (const auto& r : rows) {
            out << r.path << "  arg=" << r.argument << "  strip=" << r.strip;
            if (!r.removed.empty()) out << "  removed=" << r.removed;
            out << "\n";
        }
    }
    return kOk;
}

struct VerifyOptions {
    int max_rows = 4;
    int max_cols = 4;
    int max_t = 6;
    int jobs = 1;
    std::string format = "text";
};

struct ShapeResult {
    std::string line;
    Json json;
    Polynomial ehrhart;
    bool ok = true;
};

ShapeResult verify_shape(const SkewShape& s, int max_t) {
    ShapeResult result;
    std::vector<std::string> failures;
    const EhrhartReport report = ehr_positive(s);
    const int n = s.ground_set_size();

    if (!report.agree) failures.push_back("four-way agreement");
    if (!report.positive) failures.push_back("positive coefficients");
    if (report.by_positive.coefficient(0) != Rational(1)) failures.push_back("constant term 1");
    if (report.by_positive.degree() != n - 1) failures.push_back("degree n-1");

    const auto delannoy = enumerate_delannoy(s);
    const auto ne = enumerate_ne_paths(s);
    long expected = 0;
    for (const NEPath& gamma : ne) {
        expected += 1L << high_peaks(gamma, s).size();
    }
    if (expected != static_cast<long>(delannoy.size())) {
        failures.push_back("delannoy count identity");
    }
    bool round_trips = true;
    bool components = true;
    for (const DelannoyPath& d : delannoy) {
        const MarkedPath m = extract_marks(d);
        round_trips = round_trips && insert_diagonals(m, s) == d;
        components = components &&
                     static_cast<long>(ribbon_of(d).components().size()) == d.diagonals() + 1;
    }
    for (const NEPath& gamma : ne) {
        const auto hp = high_peaks(gamma, s);
        for (std::size_t mask = 0; mask < (std::size_t{1} << hp.size()); ++mask) {
            std::vector<Cell> subset;
            for (std::size_t b = 0; b < hp.size(); ++b) {
                if (mask >> b & 1) subset.push_back(hp[b]);
            }
            const MarkedPath m{gamma, subset};
            round_trips = round_trips && extract_marks(insert_diagonals(m, s)) == m;
        }
    }
    if (!round_trips) failures.push_back("bijection round-trip");
    if (!components) failures.push_back("component count");

    if (!(ehr_positive_total(s.rotated180()) == report.by_positive)) {
        failures.push_back("rotation invariance");
    }
    if (!(paths_to_shape(shape_to_paths(s)) == s)) {
        failures.push_back("shape round-trip");
    }
    const LatticePathPair pair = shape_to_paths(s);
    for (long t = 0; t <= max_t; ++t) {
        if (report.by_positive(Rational(t)) != Rational(lattice_points(pair, t))) {
            failures.push_back("point count at t=" + std::to_string(t));
            break;
        }
    }

    result.ok = failures.empty();
    std::ostringstream line;
    if (result.ok) {
        line << "ok    " << s.str() << "  n=" << n << " deg=" << report.by_positive.degree()
             << " paths=" << ne.size() << " delannoy=" << delannoy.size();
    } else {
        line << "FAIL  " << s.str() << " ";
        for (const auto& f : failures) line << " [" << f << "]";
    }
    result.line = line.str();
    result.json = Json{{"shape", s.str()},
                       {"ok", result.ok},
                       {"failures", failures},
                       {"ehrhart", polynomial_json(report.by_positive)}};
    result.ehrhart = report.by_positive;
    return result;
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.max_rows < 1 || opt.max_cols < 1 || opt.max_t < 0 || opt.jobs < 1) {
        err << "verify: bounds must be positive (max-t may be 0)\n";
        return kUsageError;
    }
    const auto shapes = enumerate_connected_shapes(opt.max_rows, opt.max_cols);
    std::vector<ShapeResult> results(shapes.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&]() {
        for (std::size_t i = cursor.fetch_add(1); i < shapes.size(); i = cursor.fetch_add(1)) {
            results[i] = verify_shape(shapes[i], opt.max_t);
        }
    };
    if (opt.jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < opt.jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    bool all_ok = std::all_of(results.begin(), results.end(),
                              [](const ShapeResult& r) { return r.ok; });

    // Coefficient-wise monotonicity across nested pairs in a common box.
    std::map<std::pair<int, int>, std::vector<std::size_t>> boxes;
    for (std::size_t i = 0; i < shapes.size(); ++i) {
        boxes[{shapes[i].rows(), shapes[i].lambda()[0]}].push_back(i);
    }
    long pairs_checked = 0;
    std::vector<std::string> pair_failures;
    for (const auto& [box, members] : boxes) {
        for (const std::size_t a : members) {
            for (const std::size_t b : members) {
                const SkewShape& inner = shapes[a];
                const SkewShape& outer = shapes[b];
                bool nested = true;
                for (int i = 0; i < inner.rows(); ++i) {
                    if (inner.mu()[i] < outer.mu()[i] || inner.lambda()[i] > outer.lambda()[i]) {
                        nested = false;
                        break;
                    }
                }
                if (!nested) continue;
                ++pairs_checked;
                if (!coeffwise_leq(results[a].ehrhart, results[b].ehrhart)) {
                    pair_failures.push_back(inner.str() + " vs " + outer.str());
                    all_ok = false;
                }
            }
        }
    }

    if (opt.format == "json") {
        Json arr = Json::array();
        for (const auto& r : results) arr.push_back(r.json);
        Json j{{"shapes", arr},
               {"nested_pairs_checked", pairs_checked},
               {"nested_pair_failures", pair_failures},
               {"pass", all_ok}};
        out << j.dump(2) << "\n";
    } else if (opt.format == "csv") {
        out << "shape,ok\n";
        for (std::size_t i = 0; i < shapes.size(); ++i) {
            out << shapes[i].str() << "," << (results[i].ok ? "1" : "0") << "\n";
        }
    } else {
        for (const auto& r : results) out << r.line << "\n";
        out << "nested pairs checked: " << pairs_checked << "\n";
        for (const auto& f : pair_failures) out << "FAIL  nested pair " << f << "\n";
        out << (all_ok ? "PASS" : "FAIL") << " (" << shapes.size() << " shapes)\n";
    }
    return all_ok ? kOk : kVerificationFailure;
}

struct UniformOptions {
    int k = 0;
    int n = 0;
    std::string format = "text";
};

int cmd_uniform(const UniformOptions& opt, std::ostream& out) {
    const Polynomial uniform = ehr_uniform(opt.k, opt.n);
    const SkewShape rect(std::vector<int>(opt.k, opt.n - opt.k), std::vector<int>(opt.k, 0));
    const Polynomial oracle = ehr_oracle(rect);
    const bool agree = uniform == oracle;
    if (opt.format == "json") {
        Json j{{"k", opt.k},
               {"n", opt.n},
               {"uniform", polynomial_json(uniform)},
               {"oracle", polynomial_json(oracle)},
               {"agree", agree}};
        out << j.dump(2) << "\n";
    } else if (opt.format == "csv") {
        out << "method," << csv_header(opt.n - 1) << "\n";
        out << "uniform," << csv_coeffs(uniform, opt.n - 1) << "\n";
        out << "oracle," << csv_coeffs(oracle, opt.n - 1) << "\n";
    } else {
        out << "uniform: " << uniform.str() << "\n";
        out << "oracle:  " << oracle.str() << "\n";
        if (!agree) out << "DISAGREE\n";
    }
    return agree ? kOk : kVerificationFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Ehrhart polynomials of lattice path matroid base polytopes"};
    app.require_subcommand(1);

    EhrhartOptions eopt;
    auto* ehr = app.add_subcommand("ehrhart", "Compute the Ehrhart polynomial of a shape");
    ehr->add_option("--shape", eopt.shape, "Shape literal, e.g. 433/1")->required();
    ehr->add_option("--method", eopt.method, "oracle|signed|grouped|positive|all")
        ->check(CLI::IsMember({"oracle", "signed", "grouped", "positive", "all"}));
    ehr->add_option("--format", eopt.format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    TableOptions topt;
    auto* tab = app.add_subcommand("table", "Per-path tables for a shape");
    tab->add_option("--shape", topt.shape, "Shape literal")->required();
    tab->add_option("--which", topt.which, "delannoy|grouped|filters")
        ->required()
        ->check(CLI::IsMember({"delannoy", "grouped", "filters"}));
    tab->add_option("--format", topt.format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    VerifyOptions vopt;
    auto* ver = app.add_subcommand("verify", "Property sweep over connected shapes in a box");
    ver->add_option("--max-rows", vopt.max_rows, "Box height (default 4)");
    ver->add_option("--max-cols", vopt.max_cols, "Box width (default 4)");
    ver->add_option("--max-t", vopt.max_t, "Largest dilation cross-checked (default 6)");
    ver->add_option("--jobs", vopt.jobs, "Parallel workers (default 1)");
    ver->add_option("--format", vopt.format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    UniformOptions uopt;
    auto* uni = app.add_subcommand("uniform", "Uniform-matroid (hypersimplex) polynomial");
    uni->add_option("--k", uopt.k, "Rank")->required();
    uni->add_option("--n", uopt.n, "Ground set size")->required();
    uni->add_option("--format", uopt.format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (*ehr) return cmd_ehrhart(eopt, out);
        if (*tab) return cmd_table(topt, out);
        if (*ver) return cmd_verify(vopt, out, err);
        return cmd_uniform(uopt, out);
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidShape;
    } catch (const std::exception& e) {
        err << "internal check failed: " << e.what() << "\n";
        return kVerificationFailure;
    }
}

}  // namespace lpm
