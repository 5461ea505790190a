// Command-line front end: evaluate ring expressions, classify them and run the theorem suite.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <finring.hpp>

namespace {

using namespace finring;
using nlohmann::json;

enum Exit { ok = 0, check_failed = 1, parse_failed = 2, construction_failed = 3 };

struct Options {
    std::string from_cache;
    std::string expr;
    bool json = false;
    std::string props;
    bool witness = false;
    Elem element = 0;
    std::size_t limit = 0;
    std::string suite = "all";
    std::string corpus;
    unsigned jobs = 1;
    std::string out;
    std::string format = "json";
};

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    for (std::string item; std::getline(in, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

FiniteRing input_ring(const Options& o) {
    if (!o.from_cache.empty()) {
        if (!o.expr.empty()) throw CLI::ValidationError("give either an expression or --from-cache, not both");
        return load_ring(o.from_cache);
    }
    if (o.expr.empty()) throw CLI::ValidationError("an expression (or --from-cache) is required");
    return eval_expr(o.expr);
}

int cmd_eval(const Options& o) {
    const auto R = input_ring(o);
    const auto& S = structure_of(R);
    const json j = {{"label", R.label()},
                    {"order", R.order()},
                    {"idempotents", S.idempotents.size()},
                    {"units", S.units.units.size()},
                    {"nilpotents", S.nilpotents.size()},
                    {"radical", S.radical.size()},
                    {"center", S.center.size()}};
    if (o.json) {
        std::cout << j.dump(2) << '\n';
        return ok;
    }
    std::cout << R.label() << '\n';
    for (const char* k : {"order", "idempotents", "units", "nilpotents", "radical", "center"})
        std::cout << "  " << std::left << std::setw(12) << k << j[k] << '\n';
    return ok;
}

std::string describe_witness(const FiniteRing& R, const Witness& w) {
    std::string s = w.reason;
    for (const auto& [name, v] : w.elements) s += "; " + name + " = " + std::to_string(v) + " " + R.render(v);
    return s;
}

int cmd_classify(const Options& o) {
    std::vector<Property> props;
    if (o.props.empty()) {
        const auto all = all_properties();
        props.assign(all.begin(), all.end());
    } else {
        for (const auto& name : split_list(o.props)) {
            auto p = parse_property(name);
            if (!p) throw CLI::ValidationError("--props", "unknown property '" + name + "'");
            props.push_back(*p);
        }
    }
    const auto R = input_ring(o);
    if (o.json) {
        json arr = json::array();
        for (auto p : props) arr.push_back(to_json(has_property(R, p)));
        std::cout << arr.dump(2) << '\n';
        return ok;
    }
    std::cout << R.label() << " (order " << R.order() << ")\n";
    for (auto p : props) {
        const auto& v = has_property(R, p);
        std::cout << "  " << std::left << std::setw(24) << property_name(p) << (v.holds ? "yes" : "no");
        if (o.witness && v.witness) std::cout << "  [" << describe_witness(R, *v.witness) << "]";
        std::cout << '\n';
    }
    return ok;
}

int cmd_decompose(const Options& o) {
    const auto R = input_ring(o);
    if (!R.valid(o.element))
        throw ConstructionError("element " + std::to_string(o.element) + " out of range for a ring of order " +
                                std::to_string(R.order()));
    const auto rec = clean_decompositions(R, o.element);
    if (o.json) {
        json pairs = json::array();
        for (std::size_t i = 0; i < rec.pairs.size(); ++i)
            pairs.push_back({{"idempotent", rec.pairs[i].first},
                             {"unit", rec.pairs[i].second},
                             {"commuting", bool(rec.commuting[i])}});
        std::cout << json{{"element", rec.element},
                          {"rendered", R.render(rec.element)},
                          {"pairs", pairs},
                          {"conjugacy_partition", rec.conjugacy_partition}}
                         .dump(2)
                  << '\n';
        return ok;
    }
    std::cout << "element " << rec.element << " = " << R.render(rec.element) << '\n';
    if (rec.pairs.empty()) std::cout << "  not clean\n";
    for (std::size_t i = 0; i < rec.pairs.size(); ++i) {
        const auto [e, u] = rec.pairs[i];
        std::cout << "  e = " << e << " " << R.render(e) << ", u = " << u << " " << R.render(u)
                  << (rec.commuting[i] ? "  (commuting)" : "") << '\n';
    }
    std::cout << "  conjugacy classes among the idempotents:";
    for (const auto& cls : rec.conjugacy_partition) {
        std::cout << " {";
        for (std::size_t i = 0; i < cls.size(); ++i) std::cout << (i ? "," : "") << cls[i];
        std::cout << "}";
    }
    std::cout << '\n';
    return ok;
}

int cmd_elements(const Options& o) {
    const auto R = input_ring(o);
    const std::uint32_t n = o.limit == 0 ? R.order() : static_cast<std::uint32_t>(std::min<std::size_t>(o.limit, R.order()));
    for (Elem a = 0; a < n; ++a) std::cout << a << '\t' << R.render(a) << '\n';
    if (n < R.order()) std::cout << "... " << (R.order() - n) << " more\n";
    return ok;
}

int cmd_verify(const Options& o) {
    const auto corpus = o.corpus.empty() ? default_corpus() : load_corpus(o.corpus);
    std::vector<std::string> selected;
    if (o.suite != "all") selected = split_list(o.suite);
    const auto known = theorem_ids();
    for (const auto& id : selected)
        if (std::find(known.begin(), known.end(), id) == known.end())
            throw CLI::ValidationError("--suite", "unknown theorem id '" + id + "'");
    const auto report = run_suite(corpus, selected, std::max(1u, o.jobs), selected.empty());
    if (o.json) {
        std::cout << to_json(report).dump(2) << '\n';
    } else {
        for (const auto& [id, results] : report.suite) {
            std::size_t failed = 0, skipped = 0;
            for (const auto& r : results) {
                failed += !r.passed;
                skipped += r.skipped;
            }
            std::cout << std::left << std::setw(16) << id << (failed ? "FAIL" : "ok  ") << "  " << results.size()
                      << " checks";
            if (skipped) std::cout << ", " << skipped << " skipped";
            std::cout << '\n';
            for (const auto& r : results)
                if (!r.passed) std::cout << "    " << r.ring_id << ": " << r.witness->dump() << '\n';
        }
        std::cout << report.failures << " failure(s) in " << std::fixed << std::setprecision(1)
                  << report.total_ms / 1000.0 << " s\n";
    }
    return report.failures == 0 ? ok : check_failed;
}

int cmd_cache(const Options& o) {
    if (o.format != "json" && o.format != "bin") throw CLI::ValidationError("--format", "expected json or bin");
    const auto R = input_ring(o);
    save_ring(R, o.out, o.format == "json" ? CacheFormat::json : CacheFormat::binary);
    std::cout << "wrote " << R.label() << " (order " << R.order() << ") to " << o.out << '\n';
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Finite ring tables, clean-decomposition classification and theorem checks"};
    app.require_subcommand(1);
    app.add_option("--from-cache", o.from_cache, "Load the input ring from a table cache instead of an expression");

    auto ring_arg = [&](CLI::App* sub) { sub->add_option("expr", o.expr, "Ring expression, e.g. \"T(2,Z(4))\""); };

    auto* eval = app.add_subcommand("eval", "Order and structure counts");
    ring_arg(eval);
    eval->add_flag("--json", o.json);

    auto* classify = app.add_subcommand("classify", "Property verdicts");
    ring_arg(classify);
    classify->add_option("--props", o.props, "Comma-separated property names (default: all)");
    classify->add_flag("--witness", o.witness, "Show failure witnesses");
    classify->add_flag("--json", o.json);

    auto* decompose = app.add_subcommand("decompose", "Clean decompositions of one element");
    ring_arg(decompose);
    decompose->add_option("--element", o.element, "Element index")->required();
    decompose->add_flag("--json", o.json);

    auto* elements = app.add_subcommand("elements", "Index to element table");
    ring_arg(elements);
    elements->add_option("--limit", o.limit, "Print at most N elements");

    auto* verify = app.add_subcommand("verify", "Run the theorem suite over a corpus");
    verify->add_option("--suite", o.suite, "Comma-separated theorem ids, or all");
    verify->add_option("--corpus", o.corpus, "Corpus JSON file (default: built-in corpus)");
    verify->add_option("--jobs", o.jobs, "Worker threads");
    verify->add_flag("--json", o.json);

    auto* cache = app.add_subcommand("cache", "Write operation tables to a cache file");
    ring_arg(cache);
    cache->add_option("--out", o.out, "Output path")->required();
    cache->add_option("--format", o.format, "json or bin");

    try {
        app.parse(argc, argv);
        if (eval->parsed()) return cmd_eval(o);
        if (classify->parsed()) return cmd_classify(o);
        if (decompose->parsed()) return cmd_decompose(o);
        if (elements->parsed()) return cmd_elements(o);
        if (verify->parsed()) return cmd_verify(o);
        if (cache->parsed()) return cmd_cache(o);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return parse_failed;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return parse_failed;
    } catch (const ConstructionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return construction_failed;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return construction_failed;
    } catch (const InvariantViolation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return construction_failed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return construction_failed;
    }
    return ok;
}
