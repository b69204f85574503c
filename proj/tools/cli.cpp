#include "cli.hpp"

#include "tsr/errors.hpp"
#include "tsr/rigidity.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>

namespace tsr::cli {

namespace {

using json = nlohmann::ordered_json;

struct options {
    std::string file;
    std::uint32_t field = 2;
    bool as_json = false;
    std::uint64_t cap = 1000000;
    int threads = 1;
    int dim = -1;
    std::string cycle_text;
    std::string epsilon_text;
    std::string bar_text;
    std::string swap_text;
    std::string out_path;
    bool all_witnesses = false;
};

json json_simplex(const simplicial_complex& K, int id) {
    return json(K.at(id).verts);
}

json json_bar(const simplicial_complex& K, const bar& b) {
    json j;
    j["a"] = format_rational(b.a);
    j["b"] = format_level(b.b);
    j["birth"] = json_simplex(K, b.birth_id);
    if (b.death_id) j["death"] = json_simplex(K, *b.death_id);
    return j;
}

rat parse_epsilon(const std::string& text) {
    if (text.empty()) throw parse_error("missing --epsilon");
    return parse_rational(text);
}

std::pair<rat, level> parse_bar_endpoints(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw parse_error("--bar expects 'a,b', got '" + text + "'");
    rat a = parse_rational(text.substr(0, comma));
    std::string btxt = text.substr(comma + 1);
    while (!btxt.empty() && std::isspace(static_cast<unsigned char>(btxt.front())))
        btxt.erase(btxt.begin());
    if (btxt == "inf") return {a, std::nullopt};
    return {a, parse_rational(btxt)};
}

std::pair<simplex, simplex> parse_swap(const std::string& text) {
    auto close = text.find(']');
    if (close == std::string::npos)
        throw parse_error("--swap expects '[..],[..]', got '" + text + "'");
    auto comma = text.find(',', close);
    if (comma == std::string::npos)
        throw parse_error("--swap expects two simplices, got '" + text + "'");
    return {parse_simplex(text.substr(0, comma)), parse_simplex(text.substr(comma + 1))};
}

bar find_bar(const filtration& f, const barcode_t& bars, const rat& a, const level& b) {
    for (const auto& x : bars)
        if (x.a == a && x.b == b) return x;
    throw domain_error("no bar [" + format_rational(a) + ", " + format_level(b) +
                       ") in the requested dimension");
}

void emit(std::ostream& out, const options& opt, const json& j, const std::string& text) {
    if (opt.as_json)
        out << j.dump(2) << '\n';
    else
        out << text;
}

int cmd_check(const options& opt, std::ostream& out) {
    json j;
    j["command"] = "check";
    std::string text;
    try {
        filtration f = read_filtration_file(opt.file);
        j["simplices"] = f.size();
        j["dimension"] = f.complex().dim();
        j["closed"] = true;
        j["injective"] = true;
        j["monotone"] = true;
        text += "simplices: " + std::to_string(f.size()) + " (dimension " +
                std::to_string(f.complex().dim()) + ")\n";
        text += "closed: yes\ninjective: yes\nmonotone: yes\n";
        if (f.size() >= 2) {
            const rat rho = injectivity_radius(f);
            j["injectivity_radius"] = format_rational(rho);
            text += "injectivity radius: " + format_rational(rho) + "\n";
        } else {
            j["injectivity_radius"] = nullptr;
            text += "injectivity radius: undefined (single simplex)\n";
        }
        const bool gen = is_generic(f);
        j["generic"] = gen;
        text += std::string("generic: ") + (gen ? "yes" : "no") + "\n";
    } catch (const validation_error& e) {
        j["valid"] = false;
        j["reason"] = e.what();
        text = std::string("invalid: ") + e.what() + "\n";
        emit(out, opt, j, text);
        return e.exit_status();
    }
    j["valid"] = true;
    emit(out, opt, j, text);
    return 0;
}

int cmd_barcode(const options& opt, std::ostream& out) {
    if (opt.dim < 0) throw parse_error("barcode needs --dim");
    filtration f = read_filtration_file(opt.file);
    const field_spec F(opt.field);
    auto bars = barcode(reduce(f, F), f, opt.dim);

    json j;
    j["command"] = "barcode";
    j["dim"] = opt.dim;
    j["field"] = opt.field;
    j["bars"] = json::array();
    std::string text = "barcode dim " + std::to_string(opt.dim) + " (field F_" +
                       std::to_string(opt.field) + "): " + std::to_string(bars.size()) +
                       " bar" + (bars.size() == 1 ? "" : "s") + "\n";
    for (const auto& b : bars) {
        j["bars"].push_back(json_bar(f.complex(), b));
        text += format_bar(f.complex(), b) + "\n";
    }
    emit(out, opt, j, text);
    return 0;
}

int cmd_lifespan(const options& opt, std::ostream& out) {
    filtration f = read_filtration_file(opt.file);
    const field_spec F(opt.field);
    chain alpha = parse_cycle(f.complex(), F, opt.cycle_text);
    auto ls = class_lifespan(reduce(f, F), f, alpha);

    json j;
    j["command"] = "lifespan";
    j["cycle"] = format_chain(f.complex(), alpha);
    j["a"] = format_rational(ls.a);
    j["b"] = format_level(ls.b);
    std::string text = "cycle: " + format_chain(f.complex(), alpha) + "\n";
    text += "birth: " + format_rational(ls.a) + "\n";
    text += "termination: " + format_level(ls.b) + "\n";
    if (ls.terminal_id) {
        j["terminal_simplex"] = json_simplex(f.complex(), *ls.terminal_id);
        text += "terminal simplex: " + format_simplex(f.complex().at(*ls.terminal_id)) + "\n";
    } else {
        j["terminal_simplex"] = nullptr;
        text += "terminal simplex: none\n";
    }
    emit(out, opt, j, text);
    return 0;
}

int cmd_rigidity(const options& opt, std::ostream& out) {
    filtration f = read_filtration_file(opt.file);
    const field_spec F(opt.field);
    chain alpha = parse_cycle(f.complex(), F, opt.cycle_text);
    auto cert = rigidity_radius(f, alpha, F);

    std::string limiting;
    for (std::size_t i = 0; i < cert.limiting.size(); ++i)
        limiting += (i ? ", " : "") + to_string(cert.limiting[i]);

    json j;
    j["command"] = "rigidity";
    j["cycle"] = format_chain(f.complex(), alpha);
    j["a"] = format_rational(cert.a);
    j["b"] = format_rational(cert.b);
    j["R_u"] = format_level(cert.r_upper);
    j["R_l"] = format_level(cert.r_lower);
    j["epsilon_star"] = format_rational(cert.epsilon_star);
    j["limiting"] = json::array();
    for (auto k : cert.limiting) j["limiting"].push_back(to_string(k));

    std::string text = "cycle: " + format_chain(f.complex(), alpha) + "\n";
    text += "a: " + format_rational(cert.a) + "\n";
    text += "b: " + format_rational(cert.b) + "\n";
    text += "R_u: " + format_level(cert.r_upper) + "\n";
    text += "R_l: " + format_level(cert.r_lower) + "\n";
    text += "epsilon*: " + format_rational(cert.epsilon_star) + "\n";
    text += "limiting: " + limiting + "\n";
    emit(out, opt, j, text);
    return 0;
}

int cmd_sigma(const options& opt, std::ostream& out) {
    const rat eps = parse_epsilon(opt.epsilon_text);
    filtration f = read_filtration_file(opt.file);
    const field_spec F(opt.field);
    chain alpha = parse_cycle(f.complex(), F, opt.cycle_text);
    auto sigma = sigma_epsilon(f, alpha, F, eps, opt.cap, opt.threads, opt.all_witnesses);

    json j;
    j["command"] = "sigma";
    j["cycle"] = format_chain(f.complex(), alpha);
    j["epsilon"] = format_rational(eps);
    j["orders_examined"] = sigma.orders_examined;
    j["size"] = sigma.members.size();
    j["members"] = json::array();

    std::string text = "cycle: " + format_chain(f.complex(), alpha) + "\n";
    text += "epsilon: " + format_rational(eps) + "\n";
    text += "orders examined: " + std::to_string(sigma.orders_examined) + "\n";
    text += "|Sigma| = " + std::to_string(sigma.members.size()) + "\n";
    for (int id : sigma.members) {
        json m;
        m["terminal"] = json_simplex(f.complex(), id);
        m["witness"] = json::array();
        for (int s : sigma.witness.at(id).seq) m["witness"].push_back(json_simplex(f.complex(), s));
        text += "terminal " + format_simplex(f.complex().at(id)) +
                "  witness: " + format_order(f.complex(), sigma.witness.at(id)) + "\n";
        if (opt.all_witnesses) {
            m["all_witnesses"] = json::array();
            for (const auto& w : sigma.all_witnesses.at(id)) {
                json seq = json::array();
                for (int s : w.seq) seq.push_back(json_simplex(f.complex(), s));
                m["all_witnesses"].push_back(seq);
                text += "  order: " + format_order(f.complex(), w) + "\n";
            }
        }
        j["members"].push_back(m);
    }
    emit(out, opt, j, text);
    return 0;
}

int cmd_breaking(const options& opt, std::ostream& out) {
    filtration f = read_filtration_file(opt.file);
    const field_spec F(opt.field);
    chain alpha = parse_cycle(f.complex(), F, opt.cycle_text);
    auto report = breaking_analysis(f, alpha, F, opt.cap, opt.threads);
    const auto& K = f.complex();

    json j;
    j["command"] = "breaking";
    j["cycle"] = format_chain(K, alpha);
    j["delta1"] = json_simplex(K, report.delta1_id);
    std::string text = "cycle: " + format_chain(K, alpha) + "\n";
    text += "terminal simplex under f: " + format_simplex(K.at(report.delta1_id)) + "\n";
    if (!report.t0) {
        j["t0"] = nullptr;
        text += "t0: none (rigid on all of D)\n";
        emit(out, opt, j, text);
        return 0;
    }
    j["t0"] = format_rational(*report.t0);
    j["probe_epsilon"] = format_rational(report.probe_eps);
    j["new_terminals"] = json::array();
    for (int id : report.new_terminal_ids) j["new_terminals"].push_back(json_simplex(K, id));

    text += "t0: " + format_rational(*report.t0) + "\n";
    text += "probe epsilon: " + format_rational(report.probe_eps) + "\n";
    text += "new terminals:";
    for (int id : report.new_terminal_ids) text += " " + format_simplex(K.at(id));
    text += "\n";

    if (report.partner_id) {
        const bool observed =
            std::find(report.new_terminal_ids.begin(), report.new_terminal_ids.end(),
                      *report.partner_id) != report.new_terminal_ids.end();
        j["partner_prediction"] = json_simplex(K, *report.partner_id);
        j["partner_observed"] = observed;
        text += "partner prediction: " + format_simplex(K.at(*report.partner_id)) +
                (observed ? " (observed among new terminals)"
                          : " (NOT observed among new terminals)") +
                "\n";
    } else {
        j["partner_prediction"] = nullptr;
        j["partner_candidates"] = json::array();
        text += "partner prediction: none";
        if (!report.partner_candidate_ids.empty()) {
            text += " (candidates:";
            for (int id : report.partner_candidate_ids) {
                j["partner_candidates"].push_back(json_simplex(K, id));
                text += " " + format_simplex(K.at(id));
            }
            text += ")";
        }
        text += "\n";
    }
    j["classification"] = report.classification ? to_string(*report.classification) : "none";
    text += "classification: " +
            (report.classification ? to_string(*report.classification) : std::string("none")) +
            "\n";
    emit(out, opt, j, text);
    return 0;
}

int cmd_bar_rigidity(const options& opt, std::ostream& out) {
    if (opt.dim < 0) throw parse_error("bar-rigidity needs --dim");
    const rat eps = parse_epsilon(opt.epsilon_text);
    auto [a, b] = parse_bar_endpoints(opt.bar_text);
    filtration f = read_filtration_file(opt.file);
    const field_spec F(opt.field);
    auto bars = barcode(reduce(f, F), f, opt.dim);
    bar designated = find_bar(f, bars, a, b);
    auto v = bar_rigidity_check(f, F, designated, eps);

    json j;
    j["command"] = "bar-rigidity";
    j["bar"] = json_bar(f.complex(), designated);
    j["epsilon"] = format_rational(eps);
    j["lifespan_ok"] = v.lifespan_ok;
    j["separation_ok"] = v.separation_ok;
    j["separation_violations"] = json::array();
    for (const auto& x : v.separation_violations)
        j["separation_violations"].push_back(json_bar(f.complex(), x));
    j["R_u"] = format_level(v.r_upper);
    j["R_l"] = format_level(v.r_lower);
    j["bounds_ok"] = v.bounds_ok;
    j["rigid"] = v.rigid;

    std::string text = "bar: [" + format_rational(designated.a) + ", " +
                       format_level(designated.b) + ") dim " + std::to_string(opt.dim) + "\n";
    text += "epsilon: " + format_rational(eps) + "\n";
    text += std::string("lifespan condition (eps < (b-a)/4): ") +
            (v.lifespan_ok ? "ok" : "violated") + "\n";
    text += std::string("separation condition: ") + (v.separation_ok ? "ok" : "violated") + "\n";
    for (const auto& x : v.separation_violations)
        text += "  violating bar: " + format_bar(f.complex(), x) + "\n";
    text += "gap condition (eps <= min(R_u, R_l)/2): " +
            std::string(v.bounds_ok ? "ok" : "violated") + "  [R_u = " +
            format_level(v.r_upper) + ", R_l = " + format_level(v.r_lower) + "]\n";
    text += std::string("rigid: ") + (v.rigid ? "yes" : "no") + "\n";
    emit(out, opt, j, text);
    return 0;
}

int cmd_perturb(const options& opt, std::ostream& out) {
    const rat eps = parse_epsilon(opt.epsilon_text);
    auto [s1, s2] = parse_swap(opt.swap_text);
    if (opt.out_path.empty()) throw parse_error("perturb needs --out");
    if (!opt.bar_text.empty() && opt.dim < 0)
        throw parse_error("perturb matching needs --dim with --bar");
    filtration f = read_filtration_file(opt.file);
    const field_spec F(opt.field);
    filtration g = switch_pair(f, s1, s2, eps);
    {
        std::ofstream file(opt.out_path);
        if (!file) throw parse_error("cannot write '" + opt.out_path + "'");
        write_filtration(file, g);
    }

    json j;
    j["command"] = "perturb";
    j["out"] = opt.out_path;
    j["sup_distance"] = format_rational(sup_distance(f, g));
    j["order"] = json::array();
    for (int id : g.order()) j["order"].push_back(json_simplex(g.complex(), id));

    std::string text = "wrote " + opt.out_path + "\n";
    text += "sup distance: " + format_rational(sup_distance(f, g)) + "\n";
    text += "order: " + format_order(g.complex(), order_of(g)) + "\n";

    if (!opt.bar_text.empty()) {
        auto [a, b] = parse_bar_endpoints(opt.bar_text);
        auto bars = barcode(reduce(f, F), f, opt.dim);
        bar designated = find_bar(f, bars, a, b);
        bar m = matched_bar(f, g, F, designated, eps);
        j["matched_bar"] = json_bar(g.complex(), m);
        text += "matched bar: [" + format_rational(m.a) + ", " + format_level(m.b) + ")\n";
        if (m.death_id)
            text += "matched terminal simplex: " + format_simplex(g.complex().at(*m.death_id)) +
                    "\n";
    }
    emit(out, opt, j, text);
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"terminal-simplex rigidity toolkit"};
    app.require_subcommand(1);
    options opt;

    auto add_common = [&](CLI::App* cmd, bool needs_cycle = false) {
        cmd->add_option("file", opt.file, "filtration file")->required();
        cmd->add_option("--field", opt.field, "prime field characteristic (default 2)");
        cmd->add_flag("--json", opt.as_json, "emit a single JSON object");
        cmd->add_option("--cap", opt.cap, "order-enumeration cap (default 10^6)");
        cmd->add_option("--threads", opt.threads, "parallel oracle enumeration");
        if (needs_cycle)
            cmd->add_option("--cycle", opt.cycle_text, "cycle literal, e.g. \"[1] - [0]\"")
                ->required();
    };

    auto* check = app.add_subcommand("check", "validate a filtration file");
    add_common(check);
    auto* bc = app.add_subcommand("barcode", "persistence barcode in one dimension");
    add_common(bc);
    bc->add_option("--dim", opt.dim, "homology dimension")->required();
    auto* ls = app.add_subcommand("lifespan", "birth/termination of a cycle");
    add_common(ls, true);
    auto* rg = app.add_subcommand("rigidity", "terminal-rigidity certificate for a cycle");
    add_common(rg, true);
    auto* sg = app.add_subcommand("sigma", "exact Sigma_epsilon by enumeration");
    add_common(sg, true);
    sg->add_option("--epsilon", opt.epsilon_text, "perturbation size (rational)")->required();
    sg->add_flag("--all-witnesses", opt.all_witnesses, "print every witness order");
    auto* br = app.add_subcommand("breaking", "first-break analysis of the rigidity region");
    add_common(br, true);
    auto* bar_cmd = app.add_subcommand("bar-rigidity", "barcode-level rigidity hypotheses");
    add_common(bar_cmd);
    bar_cmd->add_option("--dim", opt.dim, "bar dimension")->required();
    bar_cmd->add_option("--bar", opt.bar_text, "bar endpoints 'a,b'")->required();
    bar_cmd->add_option("--epsilon", opt.epsilon_text, "perturbation size")->required();
    auto* pt = app.add_subcommand("perturb", "write a switched filtration");
    add_common(pt);
    pt->add_option("--swap", opt.swap_text, "two simplices '[..],[..]'")->required();
    pt->add_option("--epsilon", opt.epsilon_text, "perturbation size")->required();
    pt->add_option("--out", opt.out_path, "output filtration file")->required();
    pt->add_option("--bar", opt.bar_text, "also resolve the matched bar 'a,b'");
    pt->add_option("--dim", opt.dim, "dimension for --bar");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (opt.threads < 1) throw parse_error("--threads must be at least 1");
        if (*check) return cmd_check(opt, out);
        if (*bc) return cmd_barcode(opt, out);
        if (*ls) return cmd_lifespan(opt, out);
        if (*rg) return cmd_rigidity(opt, out);
        if (*sg) return cmd_sigma(opt, out);
        if (*br) return cmd_breaking(opt, out);
        if (*bar_cmd) return cmd_bar_rigidity(opt, out);
        if (*pt) return cmd_perturb(opt, out);
        err << "no command\n";
        return 2;
    } catch (const tsr::error& e) {
        err << e.what() << '\n';
        return e.exit_status();
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace tsr::cli
