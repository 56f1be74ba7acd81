// Command-line front end: check, decompose, verify, color, audit, oracle,
// gen, batch.  Exit codes: 0 ok, 1 verification/class failure, 2 usage or
// input error, 3 theorem violation.

#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "plane21/certify.hpp"
#include "plane21/class_gate.hpp"
#include "plane21/decompose.hpp"
#include "plane21/discharge.hpp"
#include "plane21/generate.hpp"
#include "plane21/io.hpp"

using namespace plane21;

namespace {

constexpr int EXIT_OK = 0;
constexpr int EXIT_FAIL = 1;
constexpr int EXIT_USAGE = 2;
constexpr int EXIT_THEOREM = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw argument_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw argument_error("cannot write " + tmp);
        out << content;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw argument_error("cannot rename " + tmp + " to " + path);
}

void emit_to(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_atomic(out_path, content);
}

vpair parse_edge_flag(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw argument_error("--edge expects 'x,y'");
    try {
        return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
    } catch (...) {
        throw argument_error("--edge expects 'x,y' with integer ids");
    }
}

vpair boundary_for(const PlaneGraph& g, const std::string& edge_flag) {
    if (!edge_flag.empty()) return parse_edge_flag(edge_flag);
    if (auto b = g.boundary_edge()) return *b;
    throw argument_error("no boundary edge: pass --edge x,y or set boundary_edge");
}

int cmd_check(const std::string& path, const std::string& format, bool witness) {
    AdjGraph a = (format == "edgelist") ? parse_edge_list(slurp(path), path)
                                        : AdjGraph::from_plane(parse_graph(slurp(path), path));
    auto r = classify_with_witness(a);
    std::cout << "cases:";
    if (r.cases.empty()) std::cout << " none";
    for (auto t : r.cases) std::cout << " " << static_cast<int>(t);
    std::cout << "\n";
    if (witness) {
        for (auto& [t, v] : r.violations) {
            std::cout << to_string(t) << " violated by " << v.what << " on";
            for (vertex x : v.witness) std::cout << " " << x;
            std::cout << "\n";
        }
    }
    return r.cases.empty() ? EXIT_FAIL : EXIT_OK;
}

int cmd_decompose(const std::string& path, const std::string& mode,
                  const std::string& edge_flag, const std::string& out,
                  bool verify_steps) {
    PlaneGraph g = parse_graph(slurp(path), path);
    DecomposeOptions opts;
    opts.verify_steps = verify_steps;
    NiceDecomposition cert;
    if (mode == "nice") {
        cert = decompose_nice(g, boundary_for(g, edge_flag), opts);
    } else if (mode == "plain") {
        cert = decompose_21(g, opts);
    } else {
        throw argument_error("--mode must be nice or plain");
    }
    emit_to(out, emit_cert(cert));
    return EXIT_OK;
}

int cmd_verify(const std::string& gpath, const std::string& cpath) {
    PlaneGraph g = parse_graph(slurp(gpath), gpath);
    NiceDecomposition c = parse_cert(slurp(cpath), cpath);
    Verdict v = verify_decomposition(g, c, c.boundary.has_value());
    if (v.ok) {
        std::cout << "ok\n";
        return EXIT_OK;
    }
    std::cout << "invalid:\n" << v.text();
    return EXIT_FAIL;
}

int cmd_color(const std::string& gpath, const std::string& cpath,
              const std::string& lists_path, const std::string& out) {
    PlaneGraph g = parse_graph(slurp(gpath), gpath);
    NiceDecomposition c = parse_cert(slurp(cpath), cpath);
    std::optional<ListAssignment> lists;
    if (!lists_path.empty()) lists = parse_lists(slurp(lists_path), lists_path);
    auto col = greedy_color(g, c, lists);
    nlohmann::json j;
    nlohmann::json colors = nlohmann::json::object();
    for (auto& [v, k] : col.color) colors[std::to_string(v)] = k;
    j["colors"] = colors;
    j["defects"] = nlohmann::json::array();
    for (auto [u, v] : col.defects) j["defects"].push_back({u, v});
    emit_to(out, j.dump() + "\n");
    return EXIT_OK;
}

int cmd_audit(const std::string& path, const std::string& edge_flag,
              const std::string& case_flag, bool as_json, bool with_log) {
    PlaneGraph g = parse_graph(slurp(path), path);
    vpair e = boundary_for(g, edge_flag);
    auto cls = classify(AdjGraph::from_plane(g));
    CaseTag cas;
    if (case_flag == "auto") {
        if (cls.empty()) {
            std::cerr << "graph satisfies no case hypothesis\n";
            return EXIT_FAIL;
        }
        cas = *cls.begin();
    } else {
        int c = std::stoi(case_flag);
        if (c < 1 || c > 3) throw argument_error("--case must be auto, 1, 2 or 3");
        cas = static_cast<CaseTag>(c);
        if (!cls.count(cas)) {
            std::cerr << "graph does not satisfy " << to_string(cas) << "\n";
            return EXIT_FAIL;
        }
    }
    auto led = apply_rules(g, e, initial_charges(g, e), cas);
    auto rep = audit_report(led);
    if (as_json) {
        nlohmann::json j;
        j["case"] = static_cast<int>(cas);
        j["total_sixths"] = rep.total;
        nlohmann::json charges = nlohmann::json::object();
        for (auto& [el, c] : led.charge) charges[el.str()] = c;
        j["charge_sixths"] = charges;
        j["transfers"] = nlohmann::json::array();
        for (auto& t : led.transfers)
            j["transfers"].push_back({{"rule", t.rule},
                                      {"from", t.from.str()},
                                      {"to", t.to.str()},
                                      {"sixths", t.sixths}});
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "rules for " << to_string(cas) << "\n"
                  << audit_text(g, rep, with_log);
    }
    return EXIT_OK;
}

int cmd_oracle(const std::string& path, const std::string& edge_flag,
               const std::string& out) {
    PlaneGraph g = parse_graph(slurp(path), path);
    vpair e = boundary_for(g, edge_flag);
    auto c = oracle_nice(g, e);
    if (!c) {
        std::cout << "no nice decomposition exists\n";
        return EXIT_FAIL;
    }
    emit_to(out, emit_cert(*c));
    return EXIT_OK;
}

int cmd_gen(unsigned long long seed, int n, int cas, const std::string& out) {
    if (cas < 1 || cas > 3) throw argument_error("--case must be 1, 2 or 3");
    auto r = generate(seed, n, static_cast<CaseTag>(cas));
    if (r.budget_exhausted)
        std::cerr << "warning: budget exhausted at " << r.graph.vertex_count()
                  << " vertices\n";
    emit_to(out, emit_graph(r.graph));
    return EXIT_OK;
}

int cmd_batch(const std::vector<std::string>& inputs, const std::string& mode,
              const std::string& out_dir, bool fail_fast, int workers) {
    struct Item {
        std::string status;
        std::string detail;
    };
    std::vector<Item> results(inputs.size());
    std::atomic<size_t> cursor{0};
    std::atomic<bool> stop{false};

    auto stem_of = [](const std::string& p) {
        auto slash = p.find_last_of('/');
        std::string base = (slash == std::string::npos) ? p : p.substr(slash + 1);
        auto dot = base.find_last_of('.');
        return (dot == std::string::npos) ? base : base.substr(0, dot);
    };

    auto work = [&]() {
        for (;;) {
            size_t i = cursor.fetch_add(1);
            if (i >= inputs.size() || stop.load()) return;
            try {
                PlaneGraph g = parse_graph(slurp(inputs[i]), inputs[i]);
                NiceDecomposition c;
                if (mode == "nice")
                    c = decompose_nice(g, boundary_for(g, ""));
                else
                    c = decompose_21(g);
                if (!out_dir.empty())
                    write_atomic(out_dir + "/" + stem_of(inputs[i]) + ".cert.json",
                                 emit_cert(c));
                results[i] = {"ok", ""};
            } catch (const std::exception& ex) {
                results[i] = {"error", ex.what()};
                if (fail_fast) stop.store(true);
            }
        }
    };
    int nw = std::max(1, workers);
    std::vector<std::thread> pool;
    for (int i = 0; i < nw; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();

    nlohmann::json j = nlohmann::json::array();
    bool any_fail = false;
    for (size_t i = 0; i < inputs.size(); ++i) {
        nlohmann::json item;
        item["input"] = inputs[i];
        item["status"] = results[i].status.empty() ? "skipped" : results[i].status;
        if (!results[i].detail.empty()) item["detail"] = results[i].detail;
        if (results[i].status != "ok") any_fail = true;
        j.push_back(item);
    }
    std::cout << j.dump() << "\n";
    return any_fail ? EXIT_FAIL : EXIT_OK;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"(2,1)-decomposition toolkit for plane graphs"};
    app.require_subcommand(1);

    std::string path, cert_path, out, edge_flag, lists_path;
    std::string format = "embedded", mode = "nice", case_flag = "auto";
    bool witness = false, verify_steps = false, as_json = false, with_log = false;
    bool fail_fast = false;
    unsigned long long seed = 1;
    int n = 20, gen_case = 3;
    int workers = static_cast<int>(std::thread::hardware_concurrency());
    std::vector<std::string> inputs;
    std::string out_dir;

    auto* check = app.add_subcommand("check", "classify against the case hypotheses");
    check->add_option("graph", path)->required();
    check->add_option("--format", format)->check(CLI::IsMember({"embedded", "edgelist"}));
    check->add_flag("--witness", witness);

    auto* dec = app.add_subcommand("decompose", "compute a decomposition certificate");
    dec->add_option("graph", path)->required();
    dec->add_option("--mode", mode)->check(CLI::IsMember({"nice", "plain"}));
    dec->add_option("--edge", edge_flag);
    dec->add_option("--out", out);
    dec->add_flag("--verify-steps", verify_steps);

    auto* ver = app.add_subcommand("verify", "verify a certificate");
    ver->add_option("graph", path)->required();
    ver->add_option("cert", cert_path)->required();

    auto* col = app.add_subcommand("color", "derive a 1-defective 3-coloring");
    col->add_option("graph", path)->required();
    col->add_option("cert", cert_path)->required();
    col->add_option("--lists", lists_path);
    col->add_option("--out", out);

    auto* aud = app.add_subcommand("audit", "exact discharging ledger");
    aud->add_option("graph", path)->required();
    aud->add_option("--edge", edge_flag);
    aud->add_option("--case", case_flag);
    aud->add_flag("--json", as_json);
    aud->add_flag("--log", with_log);

    auto* ora = app.add_subcommand("oracle", "brute-force nice decomposition");
    ora->add_option("graph", path)->required();
    ora->add_option("--edge", edge_flag);
    ora->add_option("--out", out);

    auto* gen = app.add_subcommand("gen", "random in-class graph");
    gen->add_option("--seed", seed);
    gen->add_option("--n", n);
    gen->add_option("--case", gen_case);
    gen->add_option("--out", out);

    auto* bat = app.add_subcommand("batch", "decompose many graphs");
    bat->add_option("inputs", inputs);
    bat->add_option("--mode", mode)->check(CLI::IsMember({"nice", "plain"}));
    bat->add_option("--out-dir", out_dir);
    bat->add_flag("--fail-fast", fail_fast);
    bat->add_option("--workers", workers);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? EXIT_OK : EXIT_USAGE;
    }

    try {
        if (check->parsed()) return cmd_check(path, format, witness);
        if (dec->parsed()) return cmd_decompose(path, mode, edge_flag, out, verify_steps);
        if (ver->parsed()) return cmd_verify(path, cert_path);
        if (col->parsed()) return cmd_color(path, cert_path, lists_path, out);
        if (aud->parsed()) return cmd_audit(path, edge_flag, case_flag, as_json, with_log);
        if (ora->parsed()) return cmd_oracle(path, edge_flag, out);
        if (gen->parsed()) return cmd_gen(seed, n, gen_case, out);
        if (bat->parsed()) return cmd_batch(inputs, mode, out_dir, fail_fast, workers);
    } catch (const theorem_violation& ex) {
        std::cerr << "theorem violation: " << ex.what() << "\n" << ex.audit;
        return EXIT_THEOREM;
    } catch (const class_error& ex) {
        std::cerr << ex.what() << "\n";
        return EXIT_FAIL;
    } catch (const argument_error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return EXIT_USAGE;
    } catch (const validation_error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return EXIT_USAGE;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return EXIT_USAGE;
    }
    return EXIT_USAGE;
}
