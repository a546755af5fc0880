// choicelab command-line interface.
//
// Exit codes: 0 success (model verdicts are data, not exit status),
// 2 usage error, 3 invalid dataset, 4 bound exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "choicelab/report_json.hpp"

namespace {

using namespace choicelab;

ChoiceFunction load_dataset(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DatasetError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_dataset(buffer.str());
}

// Accepts both repeated values and comma lists: `--models ALPHA,CMLA`.
bool collect_models(const std::vector<std::string>& raw, std::vector<ModelSpec>& out) {
    for (const auto& chunk : raw) {
        std::istringstream names(chunk);
        std::string name;
        while (std::getline(names, name, ',')) {
            if (name.empty()) continue;
            auto m = parse_model(name);
            if (!m) {
                std::cerr << "unknown model '" << name << "'\n";
                return false;
            }
            out.push_back(*m);
        }
    }
    return true;
}

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

void print_classification(const ChoiceFunction& c, const ClassificationReport& report) {
    for (const auto& row : report.results) {
        std::string line = pad(model_name(row.spec), 16);
        if (row.note.rfind("skipped:", 0) == 0) {
            line += "skipped  " + row.note.substr(9);
        } else if (row.verdict.holds) {
            line += "holds";
            if (!row.note.empty()) line += "  (" + row.note + ")";
        } else {
            line += "fails";
            if (row.verdict.counterexample)
                line += "    " + row.verdict.counterexample->render(c.ground());
        }
        std::cout << line << '\n';
    }
    for (const auto& check : report.containments)
        std::cout << "audit " << (check.ok ? "ok     " : "BROKEN ") << check.name << '\n';
}

void print_explanation(const ChoiceFunction& c, const Explanation& e) {
    std::cout << "model: " << model_name(e.model) << '\n';
    if (const auto* order = std::get_if<LinearOrder>(&e.preference)) {
        std::cout << "preference (best first):";
        for (int i : order->ranking()) std::cout << ' ' << c.ground().label(i);
        std::cout << '\n';
    } else {
        std::cout << "preference relation:";
        for (auto [i, j] : std::get<BinaryRelation>(e.preference).pairs())
            std::cout << ' ' << c.ground().label(i) << '>' << c.ground().label(j);
        std::cout << '\n';
    }
    if (e.shortlist) {
        std::cout << "shortlist relation:";
        for (auto [i, j] : e.shortlist->pairs())
            std::cout << ' ' << c.ground().label(i) << '>' << c.ground().label(j);
        std::cout << '\n';
    }
    for (ItemSet menu = 1; menu <= c.full(); ++menu)
        std::cout << "filter {" << c.ground().format(menu) << "} -> {"
                  << c.ground().format(e.filter.image(menu)) << "}\n";
}

int run(int argc, char** argv) {
    CLI::App app{"analysis of complete finite choice datasets"};
    app.require_subcommand(1);

    std::string file, model_arg, which = "P,F,REL,MODELS,REV,R", suite = "all";
    std::vector<std::string> model_list;
    bool as_json = false, up_to_iso = false;
    int n = 3, threads = 1;
    std::uint64_t sample_count = 0, seed = 0;

    auto* classify_cmd = app.add_subcommand("classify", "classify a dataset against every model");
    classify_cmd->add_option("file", file)->required();
    classify_cmd->add_option("--models", model_list, "model names (default: full battery)");
    classify_cmd->add_flag("--json", as_json);

    auto* elicit_cmd = app.add_subcommand("elicit", "elicit a witness explanation for one model");
    elicit_cmd->add_option("file", file)->required();
    elicit_cmd->add_option("--model", model_arg)->required();
    elicit_cmd->add_flag("--json", as_json);

    auto* switches_cmd = app.add_subcommand("switches", "list the switches of a dataset");
    switches_cmd->add_option("file", file)->required();
    switches_cmd->add_flag("--json", as_json);

    auto* relations_cmd = app.add_subcommand("relations", "print revealed relations");
    relations_cmd->add_option("file", file)->required();
    relations_cmd->add_option("--which", which, "comma list from P,F,REL,MODELS,REV,R");
    relations_cmd->add_flag("--json", as_json);

    auto* census_cmd = app.add_subcommand("census", "count functions satisfying each model");
    census_cmd->add_option("--n", n)->required();
    census_cmd->add_option("--models", model_list);
    census_cmd->add_flag("--up-to-iso", up_to_iso);
    census_cmd->add_option("--sample", sample_count);
    census_cmd->add_option("--seed", seed);
    census_cmd->add_option("--threads", threads);
    census_cmd->add_flag("--json", as_json);

    auto* verify_cmd = app.add_subcommand("verify", "run the equivalence-theorem suites");
    verify_cmd->add_option("--n", n)->required();
    verify_cmd->add_option("--suite", suite, "suite name or 'all'");
    verify_cmd->add_option("--threads", threads);
    verify_cmd->add_option("--sample", sample_count, "sample size for n = 5 containments");
    verify_cmd->add_option("--seed", seed);
    verify_cmd->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (classify_cmd->parsed()) {
            ChoiceFunction c = load_dataset(file);
            std::vector<ModelSpec> models;
            if (!collect_models(model_list, models)) return 2;
            auto report = models.empty() ? classify_all(c) : classify_all(c, models);
            if (as_json)
                std::cout << classification_to_json(c, report).dump(2) << '\n';
            else
                print_classification(c, report);
            return 0;
        }

        if (elicit_cmd->parsed()) {
            ChoiceFunction c = load_dataset(file);
            auto m = parse_model(model_arg);
            if (!m) {
                std::cerr << "unknown model '" << model_arg << "'\n";
                return 2;
            }
            try {
                Explanation e = elicit(c, *m);
                if (as_json) {
                    Json out = explanation_to_json(e);
                    out["in_model"] = true;
                    std::cout << out.dump(2) << '\n';
                } else {
                    print_explanation(c, e);
                }
            } catch (const NotInModel& ex) {
                if (as_json) {
                    Json out;
                    out["model"] = model_name(*m);
                    out["in_model"] = false;
                    out["reason"] = ex.what();
                    std::cout << out.dump(2) << '\n';
                } else {
                    std::cout << "not in model: " << ex.what() << '\n';
                }
            }
            return 0;
        }

        if (switches_cmd->parsed()) {
            ChoiceFunction c = load_dataset(file);
            SwitchIndex sw(c);
            if (as_json) {
                std::cout << switches_to_json(c, sw).dump(2) << '\n';
            } else {
                for (const Switch& s : sw.list()) {
                    ItemSet rest = s.menu & ~item_bit(s.removed);
                    std::cout << "(" << c.ground().format(rest) << " , " << c.ground().format(s.menu)
                              << ") removed=" << c.ground().label(s.removed)
                              << "  c(A)=" << c.ground().label(c.chosen(s.menu))
                              << " c(A\\x)=" << c.ground().label(c.chosen(rest)) << '\n';
                }
            }
            return 0;
        }

        if (relations_cmd->parsed()) {
            ChoiceFunction c = load_dataset(file);
            SwitchIndex sw(c);
            Json all_json;
            std::istringstream names(which);
            std::string name;
            while (std::getline(names, name, ',')) {
                BinaryRelation r(c.ground_ptr());
                if (name == "P") r = relation_P(c);
                else if (name == "F") r = relation_F(c);
                else if (name == "REL") r = relation_related_to(c);
                else if (name == "MODELS") r = relation_models(c, sw);
                else if (name == "REV") r = relation_rev(c, psi_min(c));
                else if (name == "R") r = relation_R(c, sw);
                else {
                    std::cerr << "unknown relation '" << name << "'\n";
                    return 2;
                }
                auto props = properties(r);
                if (as_json) {
                    Json entry;
                    entry["pairs"] = relation_to_json(r);
                    entry["properties"] = properties_to_json(props);
                    all_json[name] = std::move(entry);
                } else {
                    std::cout << "# " << name << '\n';
                    for (auto [i, j] : r.pairs())
                        std::cout << c.ground().label(i) << " > " << c.ground().label(j) << '\n';
                    std::cout << "properties: asymmetric=" << props.asymmetric
                              << " transitive=" << props.transitive << " complete=" << props.complete
                              << " irreflexive=" << props.irreflexive
                              << " acyclic_ge3=" << props.acyclic_ge3
                              << " extendable=" << props.extendable << '\n';
                }
            }
            if (as_json) std::cout << all_json.dump(2) << '\n';
            return 0;
        }

        if (census_cmd->parsed()) {
            CensusOptions opt;
            opt.n = n;
            opt.up_to_iso = up_to_iso;
            opt.sample_count = sample_count;
            opt.seed = seed;
            opt.threads = threads;
            if (!collect_models(model_list, opt.models)) return 2;
            auto rows = census(opt);
            if (as_json) {
                std::cout << census_to_json(rows).dump(2) << '\n';
            } else {
                for (const auto& row : rows)
                    std::cout << pad(model_name(row.model), 16) << row.count << " / " << row.sample_size
                              << (row.up_to_iso ? "  (up to isomorphism)" : "") << '\n';
            }
            return 0;
        }

        if (verify_cmd->parsed()) {
            SuiteOptions opt;
            opt.threads = threads;
            if (sample_count > 0) opt.sample_count = sample_count;
            if (seed > 0) opt.seed = seed;
            std::vector<SuiteResult> results;
            if (suite == "all") {
                for (const auto& info : suite_registry())
                    for (int suite_n : info.supported_n)
                        if (suite_n <= n) results.push_back(run_suite(info.name, suite_n, opt));
            } else {
                results.push_back(run_suite(suite, n, opt));
            }
            if (as_json) {
                Json out = Json::array();
                for (const auto& r : results) out.push_back(suite_to_json(r));
                std::cout << out.dump(2) << '\n';
            } else {
                for (const auto& r : results) {
                    std::cout << (r.passed ? "PASS" : "FAIL") << ' ' << pad(r.name, 22) << " n=" << r.n
                              << " checked=" << r.checked;
                    if (!r.detail.empty()) std::cout << "  " << r.detail;
                    std::cout << '\n';
                    for (const auto& cex : r.counterexamples) std::cout << cex;
                }
            }
            return 0;
        }
    } catch (const DatasetError& ex) {
        std::cerr << "dataset error: " << ex.what() << '\n';
        return 3;
    } catch (const BoundExceeded& ex) {
        std::cerr << "bound exceeded: " << ex.what() << '\n';
        return 4;
    } catch (const Error& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
