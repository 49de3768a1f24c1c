#include "fpcl/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "fpcl/archlib.hpp"
#include "fpcl/equivalence.hpp"
#include "fpcl/eval.hpp"
#include "fpcl/parser.hpp"
#include "fpcl/printer.hpp"
#include "json.hpp"

namespace fpcl {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string strip(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

// Inline text unless prefixed with '@', which names a file.
std::string formula_text(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') return strip(read_file(arg.substr(1)));
    return arg;
}

std::vector<std::string> split_ports(const std::string& csv) {
    std::vector<std::string> ports;
    std::string current;
    std::istringstream in(csv);
    while (std::getline(in, current, ',')) {
        current = strip(current);
        if (current.empty()) throw DomainError("empty port name in --ports");
        validate_port_name(current);
        ports.push_back(current);
    }
    if (ports.empty()) throw DomainError("--ports must name at least one port");
    return ports;
}

std::vector<std::string> ports_or_default(const std::string& csv,
                                          const std::vector<std::string>& fallback) {
    if (!csv.empty()) return split_ports(csv);
    if (fallback.empty())
        throw DomainError("formula mentions no ports; pass --ports explicitly");
    return fallback;
}

AlgebraKind parse_algebra(const std::string& name) {
    const auto kind = algebra_from_name(name);
    if (!kind) throw DomainError("unknown algebra '" + name + "'");
    return *kind;
}

NormalizationMode parse_mode(const std::string& name) {
    const auto mode = mode_from_name(name);
    if (!mode) throw DomainError("unknown mode '" + name + "'");
    return *mode;
}

json config_to_json_value(const Configuration& config) {
    return json::parse(configuration_json(config));
}

json verdict_witness_json(const EquivVerdict& verdict) {
    if (!verdict.witness) return nullptr;
    json w;
    w["config"] = config_to_json_value(*verdict.witness);
    if (verdict.values)
        w["values"] = {verdict.values->first.str(), verdict.values->second.str()};
    return w;
}

const char* verdict_name(EquivVerdict::Kind kind) {
    switch (kind) {
        case EquivVerdict::Kind::Equivalent: return "equivalent";
        case EquivVerdict::Kind::NotEquivalent: return "not-equivalent";
        case EquivVerdict::Kind::NoCounterexampleFound:
            return "no-counterexample-found";
    }
    return "?";
}

json set_rep_to_json(const SetRep& rep) { return json::parse(set_rep_json(rep)); }

json normal_form_json(const PclNF& nf) {
    json doc;
    doc["kind"] = nf.kind == PclNF::Kind::True    ? "true"
                  : nf.kind == PclNF::Kind::False ? "false"
                                                  : "sum";
    doc["groups"] =
        nf.kind == PclNF::Kind::Sum ? set_rep_to_json(to_set_rep(nf)) : json::array();
    return doc;
}

struct CommonFlags {
    bool json = false;
};

int cmd_check(const std::string& arg, std::ostream& out) {
    std::string text;
    if (!arg.empty() && arg[0] == '@') {
        text = strip(read_file(arg.substr(1)));
    } else {
        std::ifstream probe(arg);
        text = probe ? strip(read_file(arg)) : arg;
    }
    const PclPtr z = parse_pcl(text);
    out << print_formula(z) << "\n";
    return 0;
}

int cmd_eval(const std::string& formula, const std::string& config_path, bool closure_op,
             bool as_json, std::ostream& out) {
    const PclPtr z = parse_pcl(formula_text(formula));
    const Configuration g = parse_configuration_json(read_file(config_path));
    const Value v = closure_op ? eval_closure(z, g) : eval_pcl(z, g);
    if (as_json) out << json{{"value", v.str()}}.dump() << "\n";
    else out << v.str() << "\n";
    return 0;
}

int cmd_normalize(const std::string& formula, const std::string& ports_csv,
                  const std::string& mode_name, bool sets, bool as_json,
                  std::ostream& out) {
    const PclPtr z = parse_pcl(formula_text(formula));
    const auto ports = ports_or_default(ports_csv, collect_ports(*z));
    const NormalizationMode mode = parse_mode(mode_name);
    const PclNF nf = pcl_normal_form(z, ports, mode);
    if (as_json) {
        json doc = normal_form_json(nf);
        doc["mode"] = mode_name;
        doc["text"] = print_normal_form(nf);
        if (sets) doc["sets"] = set_rep_to_json(to_set_rep(nf));
        out << doc.dump() << "\n";
    } else {
        out << print_normal_form(nf) << "\n";
        if (sets) out << set_rep_json(to_set_rep(nf)) << "\n";
    }
    return 0;
}

int cmd_equiv(const std::string& left, const std::string& right,
              const std::string& ports_csv, const std::string& mode_name,
              bool with_oracle, bool as_json, std::ostream& out) {
    const PclPtr z1 = parse_pcl(formula_text(left));
    const PclPtr z2 = parse_pcl(formula_text(right));
    std::vector<std::string> fallback = collect_ports(*z1);
    for (auto& p : collect_ports(*z2)) fallback.push_back(p);
    const auto ports = ports_or_default(ports_csv, fallback);
    const NormalizationMode mode = parse_mode(mode_name);

    bool equivalent;
    json witness = nullptr;
    json oracle_runs = json::array();
    if (with_oracle) {
        const ConsistencyReport report = cross_check(z1, z2, ports, mode);
        equivalent = report.decide;
        for (const auto& run : report.oracles) {
            oracle_runs.push_back({{"domain", run.domain},
                                   {"verdict", verdict_name(run.verdict.kind)},
                                   {"samples", run.verdict.samples_checked},
                                   {"witness", verdict_witness_json(run.verdict)}});
        }
        if (const OracleRun* w = report.first_witness())
            witness = verdict_witness_json(w->verdict);
        if (report.soundness_discrepancy()) {
            out << "soundness discrepancy: normal forms equal but an oracle found a "
                   "witness\n";
        }
    } else {
        equivalent = decide_equiv(z1, z2, ports, mode);
    }

    if (as_json) {
        json doc{{"equivalent", equivalent}, {"mode", mode_name}, {"witness", witness}};
        if (with_oracle) doc["oracles"] = oracle_runs;
        out << doc.dump() << "\n";
    } else {
        out << (equivalent ? "equivalent" : "not equivalent") << " (mode "
            << mode_name << ")\n";
        if (with_oracle)
            for (const auto& run : oracle_runs)
                out << "  oracle " << run["domain"].get<std::string>() << ": "
                    << run["verdict"].get<std::string>() << "\n";
    }
    return equivalent ? 0 : 1;
}

int cmd_oracle(const std::string& left, const std::string& right,
               const std::string& ports_csv, const std::string& algebra,
               std::optional<std::size_t> max_size, std::optional<std::int64_t> grid,
               bool as_json, std::ostream& out) {
    const PclPtr z1 = parse_pcl(formula_text(left));
    const PclPtr z2 = parse_pcl(formula_text(right));
    std::vector<std::string> fallback = collect_ports(*z1);
    for (auto& p : collect_ports(*z2)) fallback.push_back(p);
    const auto ports = ports_or_default(ports_csv, fallback);
    const AlgebraKind kind = parse_algebra(algebra);

    EquivVerdict verdict;
    if (kind == AlgebraKind::FuzzyRational) {
        if (!grid) throw DomainError("fuzzy oracle needs --grid D");
        verdict = oracle_equiv_fuzzy(z1, z2, ports, *grid, max_size.value_or(2));
    } else {
        verdict = oracle_equiv(z1, z2, ports, kind, max_size);
    }

    if (as_json) {
        out << json{{"verdict", verdict_name(verdict.kind)},
                    {"samples", verdict.samples_checked},
                    {"witness", verdict_witness_json(verdict)}}
                   .dump()
            << "\n";
    } else {
        out << verdict_name(verdict.kind) << " (" << verdict.samples_checked
            << " configurations)\n";
        if (verdict.witness) {
            out << "witness: " << configuration_json(*verdict.witness) << "\n";
            out << "values: " << verdict.values->first.str() << " vs "
                << verdict.values->second.str() << "\n";
        }
    }
    return verdict.kind == EquivVerdict::Kind::NotEquivalent ? 1 : 0;
}

int emit_template(const ArchFormula& arch, bool as_json, std::ostream& out) {
    if (as_json) {
        out << json{{"formula", print_formula(arch.formula)}, {"ports", arch.ports}}
                   .dump()
            << "\n";
    } else {
        out << print_formula(arch.formula) << "\n";
        std::string csv;
        for (const auto& p : arch.ports) {
            if (!csv.empty()) csv += ",";
            csv += p;
        }
        out << "ports: " << csv << "\n";
    }
    return 0;
}

int cmd_analyze(const std::string& formula, const std::string& config_path, bool as_json,
                std::ostream& out) {
    const PclPtr z = parse_pcl(formula_text(formula));
    const Configuration g = parse_configuration_json(read_file(config_path));
    const Value plain = eval_pcl(z, g);
    const Value unc = uncertainty(z, g);
    if (as_json) {
        out << json{{"eval", plain.str()}, {"uncertainty", unc.str()}}.dump() << "\n";
    } else {
        out << "eval: " << plain.str() << "\n";
        out << "uncertainty: " << unc.str() << "\n";
    }
    return 0;
}

int cmd_laws(const std::string& algebra, std::int64_t grid, bool as_json,
             std::ostream& out) {
    const AlgebraKind kind = parse_algebra(algebra);
    const LawReport report = check_laws(kind, grid);
    if (as_json) {
        json laws = json::array();
        for (const auto& law : report.laws)
            laws.push_back({{"name", law.name},
                            {"holds", law.holds},
                            {"counterexample",
                             law.holds ? json(nullptr) : json(law.counterexample)}});
        out << json{{"algebra", algebra},
                    {"classification", class_name(report.classification)},
                    {"laws", laws}}
                   .dump()
            << "\n";
    } else {
        for (const auto& law : report.laws) {
            out << law.name << ": " << (law.holds ? "pass" : "fail");
            if (!law.holds) out << " " << law.counterexample;
            out << "\n";
        }
        out << "classification: " << class_name(report.classification) << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"fPCL: fuzzy propositional configuration logic toolkit"};
    app.require_subcommand(1);

    // check
    auto* check = app.add_subcommand("check", "parse a formula and echo it");
    std::string check_arg;
    check->add_option("formula", check_arg, "formula text, file path, or @file")
        ->required();

    // eval / closure
    std::string eval_formula, eval_config;
    bool eval_json = false;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a formula on a configuration");
    eval_cmd->add_option("--formula", eval_formula)->required();
    eval_cmd->add_option("--config", eval_config)->required();
    eval_cmd->add_flag("--json", eval_json);

    std::string clo_formula, clo_config;
    bool clo_json = false;
    auto* clo_cmd = app.add_subcommand("closure", "evaluate the closure value");
    clo_cmd->add_option("--formula", clo_formula)->required();
    clo_cmd->add_option("--config", clo_config)->required();
    clo_cmd->add_flag("--json", clo_json);

    // normalize
    std::string norm_formula, norm_ports, norm_mode = "demorgan";
    bool norm_sets = false, norm_json = false;
    auto* norm_cmd = app.add_subcommand("normalize", "construct the normal form");
    norm_cmd->add_option("--formula", norm_formula)->required();
    norm_cmd->add_option("--ports", norm_ports, "comma-separated port list");
    norm_cmd->add_option("--mode", norm_mode, "demorgan | kleene | boolean");
    norm_cmd->add_flag("--sets", norm_sets, "also print the nested-set representation");
    norm_cmd->add_flag("--json", norm_json);

    // equiv
    std::string eq_left, eq_right, eq_ports, eq_mode = "demorgan";
    bool eq_oracle = false, eq_json = false;
    auto* eq_cmd = app.add_subcommand("equiv", "decide equivalence via normal forms");
    eq_cmd->add_option("--left", eq_left)->required();
    eq_cmd->add_option("--right", eq_right)->required();
    eq_cmd->add_option("--ports", eq_ports);
    eq_cmd->add_option("--mode", eq_mode);
    eq_cmd->add_flag("--oracle", eq_oracle, "also run the brute-force oracles");
    eq_cmd->add_flag("--json", eq_json);

    // oracle
    std::string or_left, or_right, or_ports, or_algebra;
    std::optional<std::size_t> or_max;
    std::optional<std::int64_t> or_grid;
    bool or_json = false;
    auto* or_cmd = app.add_subcommand("oracle", "brute-force equivalence check");
    or_cmd->add_option("--left", or_left)->required();
    or_cmd->add_option("--right", or_right)->required();
    or_cmd->add_option("--ports", or_ports);
    or_cmd->add_option("--algebra", or_algebra)->required();
    or_cmd->add_option("--max-size", or_max, "largest configuration size");
    or_cmd->add_option("--grid", or_grid, "fuzzy grid denominator");
    or_cmd->add_flag("--json", or_json);

    // template
    auto* tpl_cmd = app.add_subcommand("template", "emit an architecture-style formula");
    tpl_cmd->require_subcommand(1);
    int tpl_n = 4;
    bool tpl_p2p_json = false;
    auto* tpl_p2p = tpl_cmd->add_subcommand("p2p", "peer-to-peer");
    tpl_p2p->add_option("--n", tpl_n, "number of components")->required();
    tpl_p2p->add_flag("--json", tpl_p2p_json);
    int tpl_masters = 2, tpl_slaves = 2;
    bool tpl_ms_json = false;
    auto* tpl_ms = tpl_cmd->add_subcommand("master-slave", "master/slave");
    tpl_ms->add_option("--masters", tpl_masters)->required();
    tpl_ms->add_option("--slaves", tpl_slaves)->required();
    tpl_ms->add_flag("--json", tpl_ms_json);

    // analyze
    std::string an_formula, an_config;
    bool an_json = false;
    auto* an_cmd =
        app.add_subcommand("analyze", "evaluate a formula and its uncertainty value");
    an_cmd->add_option("--formula", an_formula)->required();
    an_cmd->add_option("--config", an_config)->required();
    an_cmd->add_flag("--json", an_json);

    // laws
    std::string laws_algebra;
    std::int64_t laws_grid = 4;
    bool laws_json = false;
    auto* laws_cmd = app.add_subcommand("laws", "check algebra laws and classify");
    laws_cmd->add_option("--algebra", laws_algebra)->required();
    laws_cmd->add_option("--grid", laws_grid, "fuzzy grid denominator");
    laws_cmd->add_flag("--json", laws_json);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (check->parsed()) return cmd_check(check_arg, out);
        if (eval_cmd->parsed())
            return cmd_eval(eval_formula, eval_config, false, eval_json, out);
        if (clo_cmd->parsed())
            return cmd_eval(clo_formula, clo_config, true, clo_json, out);
        if (norm_cmd->parsed())
            return cmd_normalize(norm_formula, norm_ports, norm_mode, norm_sets,
                                 norm_json, out);
        if (eq_cmd->parsed())
            return cmd_equiv(eq_left, eq_right, eq_ports, eq_mode, eq_oracle, eq_json,
                             out);
        if (or_cmd->parsed())
            return cmd_oracle(or_left, or_right, or_ports, or_algebra, or_max, or_grid,
                              or_json, out);
        if (tpl_cmd->parsed()) {
            if (tpl_p2p->parsed()) return emit_template(p2p_formula(tpl_n), tpl_p2p_json, out);
            return emit_template(master_slave_formula(tpl_masters, tpl_slaves),
                                 tpl_ms_json, out);
        }
        if (an_cmd->parsed()) return cmd_analyze(an_formula, an_config, an_json, out);
        if (laws_cmd->parsed()) return cmd_laws(laws_algebra, laws_grid, laws_json, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace fpcl
