/**
 * @file bzkit_main.cpp
 * @brief Batch command-line surface: compute tropical components, generate
 *        crystal graphs, run the verification suites, and convert between
 *        the Maya / Young / multisegment forms.
 *
 * Exit codes: 0 success, 1 verification failure, 2 parse error,
 * 3 semantic validation error.
 */
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "bzkit/io.hpp"
#include "bzkit/tableau.hpp"
#include "bzkit/verify.hpp"

namespace {

using namespace bzkit;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file " + path);
    json j;
    in >> j;
    return j;
}

int env_threads() {
    const char* v = std::getenv("BZKIT_THREADS");
    if (!v) return 1;
    int n = std::atoi(v);
    return n < 1 ? 1 : (n > 64 ? 64 : n);
}

struct GraphNode {
    std::string label;
    std::vector<std::pair<int, std::string>> edges; // (index, target label)
};

void print_graph(const std::map<std::string, GraphNode>& nodes, const std::string& format,
                 std::ostream& os) {
    if (format == "dot") {
        os << "digraph crystal {\n";
        for (const auto& [label, node] : nodes) os << "  \"" << label << "\";\n";
        for (const auto& [label, node] : nodes) {
            auto edges = node.edges;
            std::sort(edges.begin(), edges.end());
            for (const auto& [i, to] : edges)
                os << "  \"" << label << "\" -> \"" << to << "\" [label=\"" << i << "\"];\n";
        }
        os << "}\n";
    } else {
        json jnodes = json::array();
        json jedges = json::array();
        for (const auto& [label, node] : nodes) {
            jnodes.push_back(label);
            auto edges = node.edges;
            std::sort(edges.begin(), edges.end());
            for (const auto& [i, to] : edges)
                jedges.push_back(json{{"from", label}, {"to", to}, {"index", i}});
        }
        os << json{{"nodes", jnodes}, {"edges", jedges}}.dump(2) << "\n";
    }
}

void report_text(const verify::SuiteReport& rep, std::ostream& os) {
    os << "suite: " << rep.suite << "\n";
    os << "claim: " << rep.claim << "\n";
    for (const auto& c : rep.checks) {
        os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << " (" << c.tally
           << " items)";
        if (!c.pass && !c.detail.empty()) os << " -- " << c.detail;
        os << "\n";
    }
    os << "result: " << (rep.pass ? "PASS" : "FAIL") << "\n";
}

json report_json(const verify::SuiteReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back(json{
            {"name", c.name}, {"pass", c.pass}, {"tally", c.tally}, {"detail", c.detail}});
    return json{{"suite", rep.suite}, {"claim", rep.claim}, {"pass", rep.pass},
                {"checks", checks}};
}

int run(int argc, char** argv) {
    CLI::App app{"bzkit: BZ data over Maya diagrams from Lusztig data"};
    app.require_subcommand(1);

    // phi / phi-prime -------------------------------------------------------
    std::string a_path, k_text, norm_text = "e", format = "text";
    bool all_components = false, as_json = false;

    auto add_phi = [&](const std::string& name, bool prime) {
        CLI::App* cmd = app.add_subcommand(
            name, prime ? "Row-sum tropical components of a Lusztig datum"
                        : "Tropical components of a Lusztig datum");
        cmd->add_option("--a", a_path, "Lusztig datum JSON file")->required();
        cmd->add_option("--k", k_text, "Maya diagram, e.g. \"I=1..2;{1,3}\"");
        cmd->add_flag("--all", all_components, "print every component");
        cmd->add_flag("--json", as_json, "JSON output");
        cmd->callback([&, prime] {
            LusztigFinite a = lusztig_finite_from_json(load_json(a_path));
            if (all_components) {
                BZFinite M = prime ? phi_prime(a) : phi(a);
                if (as_json) {
                    std::cout << to_json(M).dump(2) << "\n";
                } else {
                    for (uint32_t mask = 1; mask < M.full_mask(); ++mask)
                        std::cout << M.maya_of(mask).str() << " -> " << M.comp(mask) << "\n";
                }
                return;
            }
            if (k_text.empty()) throw ValidationError("need --k or --all");
            MayaFinite k = parse_maya_finite(k_text);
            long long v = prime ? phi_prime_component(a, k) : phi_component(a, k);
            std::cout << v << "\n";
        });
    };
    add_phi("phi", false);
    add_phi("phi-prime", true);

    // phi-inverse ------------------------------------------------------------
    std::string m_path;
    {
        CLI::App* cmd = app.add_subcommand("phi-inverse",
                                           "Recover the Lusztig datum of a BZ datum");
        cmd->add_option("--m", m_path, "BZ datum JSON file")->required();
        cmd->add_option("--normalization", norm_text, "e or w0")
            ->check(CLI::IsMember({"e", "w0"}));
        cmd->callback([&] {
            BZFinite M = bz_finite_from_json(load_json(m_path));
            Normalization side = (norm_text == "e") ? Normalization::E : Normalization::W0;
            std::cout << to_json(phi_inverse(M, side)).dump(2) << "\n";
        });
    }

    // phi-z -------------------------------------------------------------------
    std::string gen_path, charged_text;
    int charge_bound = 2, box_bound = 6;
    {
        CLI::App* cmd = app.add_subcommand(
            "phi-z", "Components of the shift-invariant image of a periodic datum");
        cmd->add_option("--gen", gen_path, "periodic Lusztig datum JSON file")->required();
        cmd->add_option("--k", charged_text, "charged Maya diagram, e.g. \"r=1;lambda=1\"");
        cmd->add_option("--charge-bound", charge_bound, "window charge bound");
        cmd->add_option("--box-bound", box_bound, "window box bound");
        cmd->callback([&] {
            LusztigAffine gen = lusztig_affine_from_json(load_json(gen_path));
            BZAffineView view(gen);
            if (!charged_text.empty()) {
                std::cout << view.component(parse_maya_charged(charged_text)) << "\n";
                return;
            }
            json comps = json::array();
            for (int r = -charge_bound; r <= charge_bound; ++r)
                for (const Partition& sh : partitions_up_to(box_bound)) {
                    MayaCharged k(r, sh);
                    comps.push_back(json{{"maya", to_json(k)}, {"M", view.component(k)}});
                }
            std::cout << json{{"generator", to_json(gen)}, {"components", comps}}.dump(2)
                      << "\n";
        });
    }

    // graph --------------------------------------------------------------------
    std::string kind = "finite";
    int g_lo = 1, g_hi = 1, g_l = 3, g_depth = 3;
    {
        CLI::App* cmd = app.add_subcommand("graph", "Lowering closure as a labeled graph");
        cmd->add_option("--kind", kind, "finite or affine")
            ->check(CLI::IsMember({"finite", "affine"}));
        cmd->add_option("--lo", g_lo, "interval lower end (finite)");
        cmd->add_option("--hi", g_hi, "interval upper end (finite)");
        cmd->add_option("--l", g_l, "period (affine)");
        cmd->add_option("--depth", g_depth, "closure depth");
        cmd->add_option("--format", format, "dot or json")
            ->check(CLI::IsMember({"dot", "json", "text"}));
        cmd->callback([&] {
            std::map<std::string, GraphNode> nodes;
            if (kind == "finite") {
                Interval I(g_lo, g_hi);
                std::set<LusztigFinite> seen;
                std::vector<LusztigFinite> frontier{LusztigFinite(I)};
                seen.insert(frontier.front());
                nodes[frontier.front().str()] = {frontier.front().str(), {}};
                for (int d = 0; d < g_depth; ++d) {
                    std::vector<LusztigFinite> next;
                    for (const auto& a : frontier)
                        for (int i = I.lo; i <= I.hi; ++i) {
                            auto b = apply(a, i, CrystalOp::FStar);
                            if (!b) continue;
                            nodes[a.str()].edges.emplace_back(i, b->str());
                            if (seen.insert(*b).second) {
                                nodes[b->str()] = {b->str(), {}};
                                next.push_back(*b);
                            }
                        }
                    frontier = std::move(next);
                }
            } else {
                std::set<LusztigAffine> seen;
                std::vector<LusztigAffine> frontier{LusztigAffine(g_l)};
                seen.insert(frontier.front());
                nodes[frontier.front().str()] = {frontier.front().str(), {}};
                for (int d = 0; d < g_depth; ++d) {
                    std::vector<LusztigAffine> next;
                    for (const auto& a : frontier)
                        for (int p = 0; p < g_l; ++p) {
                            auto b = apply_hat(a, p, CrystalOp::FStar);
                            if (!b) continue;
                            nodes[a.str()].edges.emplace_back(p, b->str());
                            if (seen.insert(*b).second) {
                                nodes[b->str()] = {b->str(), {}};
                                next.push_back(*b);
                            }
                        }
                    frontier = std::move(next);
                }
            }
            print_graph(nodes, format == "text" ? "dot" : format, std::cout);
        });
    }

    // verify ----------------------------------------------------------------
    std::string suite;
    verify::SuiteConfig vcfg;
    bool verify_failed = false;
    {
        CLI::App* cmd = app.add_subcommand("verify", "Run a verification suite");
        cmd->add_option("--suite", suite, "suite name or 'all'")->required();
        cmd->add_option("--seed", vcfg.seed, "random seed");
        cmd->add_option("--samples", vcfg.samples, "sample count");
        cmd->add_option("--depth", vcfg.depth, "closure depth");
        cmd->add_option("--l", vcfg.l, "period");
        cmd->add_option("--charge-bound", vcfg.charge_bound, "window charge bound");
        cmd->add_option("--box-bound", vcfg.box_bound, "window box bound");
        cmd->add_option("--window-cap", vcfg.window_cap, "subinterval size cap");
        cmd->add_flag("--json", as_json, "JSON report");
        cmd->callback([&] {
            vcfg.threads = env_threads();
            std::vector<std::string> names;
            if (suite == "all")
                names = verify::suite_names();
            else if (verify::has_suite(suite))
                names.push_back(suite);
            else
                throw ValidationError("unknown suite '" + suite + "'");
            json all = json::array();
            for (const auto& n : names) {
                verify::SuiteReport rep = verify::run_suite(n, vcfg);
                verify_failed = verify_failed || !rep.pass;
                if (as_json)
                    all.push_back(report_json(rep));
                else
                    report_text(rep, std::cout);
            }
            if (as_json) std::cout << all.dump(2) << "\n";
        });
    }

    // maya --------------------------------------------------------------------
    {
        CLI::App* cmd = app.add_subcommand("maya", "Maya / Young / core / quotient utilities");
        cmd->require_subcommand(1);
        static std::string partition_text;
        static int m_charge = 0, m_l = 3;

        CLI::App* young = cmd->add_subcommand("young", "charged diagram of a partition");
        young->add_option("--charge", m_charge, "charge");
        young->add_option("--partition", partition_text, "comma-separated parts");
        young->callback([&] {
            MayaCharged k(m_charge, parse_partition(partition_text));
            std::cout << to_json(k).dump() << "\n";
        });

        CLI::App* core = cmd->add_subcommand("core", "is the partition an l-core?");
        core->add_option("--l", m_l, "period")->required();
        core->add_option("--partition", partition_text, "comma-separated parts");
        core->callback([&] {
            std::cout << (is_l_core(parse_partition(partition_text), m_l) ? "true" : "false")
                      << "\n";
        });

        CLI::App* quot = cmd->add_subcommand("quotient", "charges of the l-quotient");
        quot->add_option("--l", m_l, "period")->required();
        quot->add_option("--charge", m_charge, "charge");
        quot->add_option("--partition", partition_text, "comma-separated parts");
        quot->callback([&] {
            MayaCharged k(m_charge, parse_partition(partition_text));
            auto comps = l_quotient(k, m_l);
            for (size_t j = 0; j < comps.size(); ++j) {
                if (j) std::cout << ",";
                std::cout << comps[j].charge;
            }
            std::cout << "\n";
        });
    }

    // segments -----------------------------------------------------------------
    std::string seg_text;
    int seg_l = 3;
    {
        CLI::App* cmd = app.add_subcommand("segments",
                                           "convert between datum JSON and multisegment text");
        cmd->add_option("--a", a_path, "periodic Lusztig datum JSON file");
        cmd->add_option("--text", seg_text, "multisegment text, e.g. \"(0;2)^3 (1;1)\"");
        cmd->add_option("--l", seg_l, "period (with --text)");
        cmd->callback([&] {
            if (!a_path.empty()) {
                LusztigAffine a = lusztig_affine_from_json(load_json(a_path));
                std::cout << to_multisegments(a).str() << "\n";
            } else if (!seg_text.empty()) {
                std::cout << to_json(from_multisegments(Multisegments::parse(seg_text, seg_l)))
                                 .dump()
                          << "\n";
            } else {
                throw ValidationError("need --a or --text");
            }
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return verify_failed ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const bzkit::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const bzkit::ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
