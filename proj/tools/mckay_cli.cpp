#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "mckay/chambers.hpp"
#include "mckay/components.hpp"
#include "mckay/errors.hpp"
#include "mckay/lab_suite.hpp"
#include "mckay/mckay_graph.hpp"
#include "mckay/partitions.hpp"

using nlohmann::json;
using namespace mckay;

namespace {

json cyc_json(const CycNum& v) {
    json terms = json::array();
    for (const auto& t : v.terms()) terms.push_back({{"num", t.num}, {"den", t.den}, {"exp", t.exp}});
    return terms;
}

json rational_json(const Rational& r) { return {{"num", r.num()}, {"den", r.den()}}; }

DimVec parse_dim(const std::string& text, int expected) {
    DimVec d;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw InvalidParameter("empty entry in dimension vector");
        d.push_back(std::stoll(cur));
        cur.clear();
    };
    for (char c : text) {
        if (c == ',')
            flush();
        else
            cur.push_back(c);
    }
    flush();
    if ((int)d.size() != expected)
        throw InvalidParameter("dimension vector needs " + std::to_string(expected) +
                               " entries, got " + std::to_string(d.size()));
    return d;
}

json signature_json(const ChamberSignature& sig) {
    json j;
    j["n"] = sig.n;
    j["signs"] = sig.signs;
    return j;
}

json walls_json(const RootDatum& datum, long long n) {
    json out = json::array();
    for (const auto& w : walls(datum, n)) {
        json jw;
        jw["delta_wall"] = w.is_delta;
        jw["m"] = w.level;
        jw["form"] = w.form;
        out.push_back(jw);
    }
    return out;
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw InvalidParameter("cannot open output file " + path);
    os << text;
}

long long enumeration_budget(long long flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("MCKAY_BUDGET")) {
        long long v = std::atoll(env);
        if (v > 0) return v;
    }
    return kDefaultEnumerationBudget;
}

int check_exit(bool passed) { return passed ? 0 : 2; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact McKay-correspondence combinatorics for finite SL2(C) subgroups"};
    app.require_subcommand(1);

    std::string spec_text, dims_text, format, out_path, suite;
    long long n = 0, bound = -1, budget_flag = 0, ell = 2;
    unsigned long long seed = 0;
    int samples = 100;
    bool as_json = false, as_dot = false, as_csv = false;

    auto* cmd_group = app.add_subcommand("group", "character table of a finite SL2(C) subgroup");
    cmd_group->add_option("spec", spec_text, "cyclic:<l>, bd:<m>, 2T, 2O or 2I")->required();
    cmd_group->add_flag("--json", as_json, "emit JSON");
    cmd_group->add_option("--out", out_path, "output file");

    auto* cmd_graph = app.add_subcommand("graph", "McKay graph and affine Cartan data");
    cmd_graph->add_option("spec", spec_text)->required();
    cmd_graph->add_flag("--json", as_json);
    cmd_graph->add_flag("--dot", as_dot);
    cmd_graph->add_option("--out", out_path);

    auto* cmd_components = app.add_subcommand("components", "index the fixed-locus components");
    cmd_components->add_option("spec", spec_text)->required();
    cmd_components->add_option("-n", n, "number of points")->required();
    cmd_components->add_flag("--json", as_json);
    cmd_components->add_flag("--csv", as_csv);
    cmd_components->add_option("--budget", budget_flag, "search-node budget");
    cmd_components->add_option("--out", out_path);

    auto* cmd_weight = app.add_subcommand("weight", "weight, size and an orbit witness");
    cmd_weight->add_option("spec", spec_text)->required();
    cmd_weight->add_option("-d", dims_text, "comma-separated dimension vector")->required();
    cmd_weight->add_option("--bound", bound, "orbit search coefficient bound");
    cmd_weight->add_option("--out", out_path);

    auto* cmd_chambers = app.add_subcommand("chambers", "GIT chambers discovered inside the cone");
    cmd_chambers->add_option("spec", spec_text)->required();
    cmd_chambers->add_option("-n", n)->required();
    cmd_chambers->add_option("--bound", bound, "word length bound (default 12)");
    cmd_chambers->add_option("--out", out_path);

    auto* cmd_bc = app.add_subcommand("bc", "chamber attached to a component index");
    cmd_bc->add_option("spec", spec_text)->required();
    cmd_bc->add_option("-d", dims_text)->required();
    cmd_bc->add_option("--out", out_path);

    auto* cmd_verify = app.add_subcommand("verify", "oracle suites");
    cmd_verify->add_option("--suite", suite, "cyclic | repspace | fixedpoint")->required();
    cmd_verify->add_option("-l", ell, "cyclic order");
    cmd_verify->add_option("-n", n, "size bound");
    cmd_verify->add_option("--seed", seed, "sample seed");
    cmd_verify->add_option("--samples", samples, "sample count");
    cmd_verify->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (cmd_group->parsed()) {
            GroupData g = build_group(GroupSpec::parse(spec_text));
            if (as_json) {
                json j;
                j["order"] = g.order;
                j["classes"] = json::array();
                for (const auto& c : g.classes)
                    j["classes"].push_back({{"label", c.label}, {"size", c.size}});
                j["degrees"] = g.degrees;
                j["table"] = json::array();
                for (const auto& row : g.table) {
                    json jr = json::array();
                    for (const auto& v : row) jr.push_back(cyc_json(v));
                    j["table"].push_back(jr);
                }
                j["std"] = json::array();
                for (const auto& v : g.std_values) j["std"].push_back(cyc_json(v));
                write_output(j.dump(2) + "\n", out_path);
            } else {
                std::ostringstream os;
                os << g.spec.str() << ": order " << g.order << ", " << g.classes.size()
                   << " classes\n";
                os << "classes:";
                for (const auto& c : g.classes) os << " " << c.label << "(" << c.size << ")";
                os << "\n";
                for (size_t r = 0; r < g.table.size(); ++r) {
                    os << "chi" << r << " (deg " << g.degrees[r] << "):";
                    for (const auto& v : g.table[r]) os << " " << v.str();
                    os << "\n";
                }
                os << "std:";
                for (const auto& v : g.std_values) os << " " << v.str();
                os << "\n";
                write_output(os.str(), out_path);
            }
            return 0;
        }

        if (cmd_graph->parsed()) {
            GroupModel m = build_model(GroupSpec::parse(spec_text));
            if (as_dot) {
                write_output(to_dot(m.datum.graph), out_path);
            } else if (as_json) {
                json j;
                j["type"] = m.datum.type_label();
                j["delta"] = m.datum.delta;
                j["mult"] = m.datum.graph.mult;
                j["vertices"] = json::array();
                for (int i = 0; i < m.datum.num_vertices(); ++i)
                    j["vertices"].push_back({{"index", i}, {"degree", m.datum.graph.degrees[i]}});
                write_output(j.dump(2) + "\n", out_path);
            } else {
                std::ostringstream os;
                os << m.group.spec.str() << ": type " << m.datum.type_label() << ", delta =";
                for (long long d : m.datum.delta) os << " " << d;
                os << "\n";
                write_output(os.str(), out_path);
            }
            return 0;
        }

        if (cmd_components->parsed()) {
            GroupModel m = build_model(GroupSpec::parse(spec_text));
            std::string fmt = as_csv ? "csv" : "json";
            write_output(component_report(m.datum, n, fmt, enumeration_budget(budget_flag),
                                          m.group.spec.str()),
                         out_path);
            return 0;
        }

        if (cmd_weight->parsed()) {
            GroupModel m = build_model(GroupSpec::parse(spec_text));
            DimVec d = parse_dim(dims_text, m.datum.num_vertices());
            json j;
            j["d"] = d;
            j["size"] = size_of(d, m.datum);
            j["weight"] = weight(d, m.datum);
            j["witness_word"] = orbit_witness(d, m.datum, bound);
            write_output(j.dump(2) + "\n", out_path);
            return 0;
        }

        if (cmd_chambers->parsed()) {
            GroupModel m = build_model(GroupSpec::parse(spec_text));
            long long b = bound > 0 ? bound : 12;
            auto enumeration = enumerate_chambers_in_F(m.datum, n, b);
            json j;
            j["n"] = n;
            j["bound"] = b;
            j["stabilized"] = enumeration.stabilized;
            j["count"] = enumeration.signatures.size();
            j["walls"] = walls_json(m.datum, n);
            j["chambers"] = json::array();
            for (size_t i = 0; i < enumeration.signatures.size(); ++i) {
                json jc = signature_json(enumeration.signatures[i]);
                jc["witness_word"] = enumeration.witness_words[i];
                j["chambers"].push_back(jc);
            }
            write_output(j.dump(2) + "\n", out_path);
            return 0;
        }

        if (cmd_bc->parsed()) {
            GroupModel m = build_model(GroupSpec::parse(spec_text));
            DimVec d = parse_dim(dims_text, m.datum.num_vertices());
            BCImage img = bc_map(d, m.datum);
            json j;
            j["d"] = d;
            j["r"] = img.r;
            j["degenerate"] = img.degenerate;
            j["word"] = img.word;
            j["signature"] = signature_json(img.signature);
            j["walls"] = walls_json(m.datum, std::max<long long>(img.r, 1));
            write_output(j.dump(2) + "\n", out_path);
            return 0;
        }

        if (cmd_verify->parsed()) {
            json j;
            bool passed = true;
            if (suite == "cyclic") {
                if (n <= 0) n = 8;
                j["suite"] = "cyclic";
                j["l"] = ell;
                j["n"] = n;
                j["checks"] = json::array();
                for (long long k = 0; k <= n; ++k) {
                    CheckReport r = cyclic_cross_check(ell, k);
                    for (const auto& item : r.items) {
                        passed = passed && item.passed;
                        j["checks"].push_back({{"n", k},
                                               {"name", item.name},
                                               {"passed", item.passed},
                                               {"detail", item.detail}});
                    }
                }
            } else if (suite == "repspace") {
                j["suite"] = "repspace";
                j["l"] = ell;
                j["seed"] = seed;
                j["samples"] = samples;
                LabReport r = repspace_suite(ell, seed, samples);
                j["checks"] = json::array();
                for (const auto& c : r.checks) {
                    passed = passed && c.passed;
                    j["checks"].push_back({{"name", c.name},
                                           {"residual", c.residual},
                                           {"tolerance", c.tolerance},
                                           {"passed", c.passed}});
                }
            } else if (suite == "fixedpoint") {
                if (n <= 0) n = 5;
                j["suite"] = "fixedpoint";
                j["l"] = ell;
                j["n"] = n;
                LabReport r = fixed_point_suite(ell, n);
                j["checks"] = json::array();
                for (const auto& c : r.checks) {
                    passed = passed && c.passed;
                    j["checks"].push_back({{"name", c.name},
                                           {"residual", c.residual},
                                           {"tolerance", c.tolerance},
                                           {"passed", c.passed}});
                }
            } else {
                throw InvalidParameter("unknown verify suite '" + suite + "'");
            }
            j["passed"] = passed;
            write_output(j.dump(2) + "\n", out_path);
            return check_exit(passed);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
