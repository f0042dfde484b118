// hc: command line front end for the distance-4 partition toolkit.
// Exit codes: 0 = success, 1 = negative result / failed check, 2 = usage.
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <hcube/bounds.hpp>
#include <hcube/canon.hpp>
#include <hcube/certificate.hpp>
#include <hcube/classify.hpp>
#include <hcube/clique.hpp>
#include <hcube/doublecount.hpp>
#include <hcube/extend.hpp>
#include <hcube/search.hpp>

using json = nlohmann::json;
using namespace hcube;

namespace {

constexpr const char* kVersion = "1.0.0";

std::uint64_t fnv1a_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::uint64_t h = 1469598103934665603ull;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

struct RunReport {
    json j;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::string out_path;

    explicit RunReport(const std::string& sub) {
        j["tool"] = "hc";
        j["version"] = kVersion;
        j["subcommand"] = sub;
        j["parameters"] = json::object();
        j["inputs"] = json::object();
        j["outputs"] = json::array();
    }
    void param(const std::string& k, const json& v) { j["parameters"][k] = v; }
    void input(const std::string& path) {
        char buf[19];
        std::snprintf(buf, sizeof(buf), "0x%016llx",
                      static_cast<unsigned long long>(fnv1a_file(path)));
        j["inputs"][path] = buf;
    }
    void output(const std::string& path) { j["outputs"].push_back(path); }
    void emit() {
        j["wall_seconds"] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const std::string line = j.dump();
        if (out_path.empty()) {
            std::cout << line << "\n";
        } else {
            std::ofstream out(out_path, std::ios::app);
            out << line << "\n";
        }
    }
};

int default_jobs() {
    if (const char* env = std::getenv("HC_JOBS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

std::set<int> parse_orders(const std::string& s) {
    std::set<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.insert(std::stoi(tok));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"toolkit for partitioning binary Hamming spaces into distance-4 codes"};
    app.require_subcommand(1);
    app.fallthrough();  // --report may follow the subcommand name
    app.set_version_flag("--version", kVersion);
    std::string report_path;
    app.add_option("--report", report_path, "append a JSON run report line to this file");

    // bounds
    auto* sb = app.add_subcommand("bounds", "counting bounds on the chromatic number");
    int b_n = 8, b_k = 2;
    std::int64_t b_a = 0;
    sb->add_option("-n", b_n, "cube dimension")->required();
    sb->add_option("-k", b_k, "power of the cube");
    sb->add_option("--a", b_a, "A(n,k+1); default from the built-in table for k=2");

    // canon
    auto* sc = app.add_subcommand("canon", "canonical form and automorphisms of a codelist");
    std::string c_file;
    sc->add_option("file", c_file, "codelist file")->required()->check(CLI::ExistingFile);

    // maxcode
    auto* sm = app.add_subcommand("maxcode", "largest even code of minimum distance d");
    int m_n = 9, m_d = 4;
    sm->add_option("-n", m_n, "word length")->required();
    sm->add_option("-d", m_d, "minimum distance");

    // classify
    auto* scl = app.add_subcommand("classify", "equivalence classes of even (n,M,d) codes");
    int cl_n = 9, cl_M = 20, cl_d = 4;
    std::string cl_method = "anchored", cl_out;
    scl->add_option("-n", cl_n, "word length")->required();
    scl->add_option("-M", cl_M, "code size")->required();
    scl->add_option("-d", cl_d, "minimum distance");
    scl->add_option("--method", cl_method, "anchored | augment")
        ->check(CLI::IsMember({"anchored", "augment"}));
    scl->add_option("--out", cl_out, "write one codelist per class into this directory");

    // search
    auto* ss = app.add_subcommand("search", "symmetry-prescribed partition search");
    int s_case = 0, s_n = 9;
    std::string s_orders, s_checkpoint, s_out;
    int s_seed_class = -1;
    int s_jobs = default_jobs();
    bool s_list = false;
    ss->add_option("--case", s_case, "case index, 0-based (see --list)");
    ss->add_flag("--list", s_list, "print the case table and exit");
    ss->add_option("-n", s_n, "word length");
    ss->add_option("--orders", s_orders, "subgroup orders, comma separated");
    ss->add_option("--seed-class", s_seed_class, "restrict to one seed class index");
    ss->add_option("--checkpoint", s_checkpoint, "checkpoint directory");
    ss->add_option("--out", s_out, "write found partitions into this directory");
    ss->add_option("--jobs", s_jobs, "worker threads (default $HC_JOBS or 1)");

    // verify
    auto* sv = app.add_subcommand("verify", "check a partition file or the built-in certificate");
    std::string v_file;
    bool v_builtin = false;
    int v_doubling = -1;
    sv->add_option("file", v_file, "partition file")->check(CLI::ExistingFile);
    sv->add_flag("--builtin-certificate", v_builtin, "verify the built-in 13-code partition");
    sv->add_option("--doubling", v_doubling, "print the doubled-coloring statement for index i");

    // doublecount
    auto* sd = app.add_subcommand("doublecount", "two-way counting consistency check");
    bool d_sandbox = false;
    sd->add_flag("--sandbox", d_sandbox, "run the built-in length-7 end-to-end case");

    // extend
    auto* se = app.add_subcommand("extend", "extend a partition of E^n to E^(n+1)");
    std::string e_file, e_out;
    bool e_all = false;
    int e_jobs = default_jobs();
    se->add_option("file", e_file, "partition file")->required()->check(CLI::ExistingFile);
    se->add_flag("--all", e_all, "count every extension instead of stopping at the first");
    se->add_option("--out", e_out, "write the first extension found to this file");
    se->add_option("--jobs", e_jobs, "worker threads (default $HC_JOBS or 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // usage errors exit 2, --help/--version exit 0
    }

    try {
        if (sb->parsed()) {
            RunReport rep("bounds");
            rep.out_path = report_path;
            rep.param("n", b_n);
            rep.param("k", b_k);
            if (b_a == 0) {
                if (b_k != 2) {
                    std::cerr << "bounds: --a is required for k != 2\n";
                    return 2;
                }
                auto a = known_a_n3(b_n);
                if (!a) {
                    std::cerr << "bounds: no built-in A(" << b_n << ",3); pass --a\n";
                    return 2;
                }
                b_a = *a;
            }
            BoundReport r = chromatic_bounds(b_n, b_k, b_a);
            std::cout << "chi_" << b_k << "(" << b_n << ") >= " << r.lower;
            if (r.upper) std::cout << ", <= " << *r.upper;
            std::cout << "   (A(" << b_n << "," << (b_k + 1) << ") = " << r.a_value << ")\n";
            rep.j["result"] = {{"lower", r.lower}};
            if (r.upper) rep.j["result"]["upper"] = *r.upper;
            rep.emit();
            return 0;
        }

        if (sc->parsed()) {
            RunReport rep("canon");
            rep.out_path = report_path;
            rep.input(c_file);
            Code c = read_codelist_file(c_file);
            CanonicalForm cf = canonical_form(c);
            Group aut = automorphism_group(c);
            std::cout << "# canonical form (" << c.length << "," << c.size() << ","
                      << min_distance(c) << "), |Aut| = " << aut.order() << "\n";
            write_codelist(std::cout, cf.code);
            std::cout << "# certificate " << format_isometry(cf.certificate) << "\n";
            rep.j["result"] = {{"aut_order", aut.order()},
                               {"min_distance", min_distance(c)},
                               {"is_canonical", cf.code == c}};
            rep.emit();
            return 0;
        }

        if (sm->parsed()) {
            RunReport rep("maxcode");
            rep.out_path = report_path;
            rep.param("n", m_n);
            rep.param("d", m_d);
            const CompatGraph g = build_compat_graph(enumerate_even_bits(m_n), m_n, m_d);
            auto [size, code] = max_clique(g);
            std::cout << "# largest even (" << m_n << ",*," << m_d << ") code: " << size
                      << " words\n";
            write_codelist(std::cout, code);
            rep.j["result"] = {{"max_size", size}};
            rep.emit();
            return 0;
        }

        if (scl->parsed()) {
            RunReport rep("classify");
            rep.out_path = report_path;
            rep.param("n", cl_n);
            rep.param("M", cl_M);
            rep.param("d", cl_d);
            rep.param("method", cl_method);
            ClassifyOptions opts;
            opts.method = cl_method == "anchored" ? ClassifyMethod::AnchoredClique
                                                  : ClassifyMethod::Augmentation;
            if (!cl_out.empty()) {
                opts.out_dir = cl_out;
                rep.output(cl_out);
            }
            opts.progress = [](long long seen, long long classes) {
                std::cerr << "\r" << seen << " examined, " << classes << " classes" << std::flush;
            };
            ClassificationResult r = classify_codes(cl_n, cl_M, cl_d, opts);
            std::cerr << "\n";
            std::cout << r.representatives.size() << " classes of even (" << cl_n << "," << cl_M
                      << "," << cl_d << ") codes\n";
            for (std::size_t i = 0; i < r.representatives.size(); ++i)
                std::cout << "  class " << i << ": |Aut| = " << r.aut_orders[i] << "\n";
            rep.j["result"] = {{"classes", r.representatives.size()},
                               {"aut_orders", r.aut_orders}};
            rep.emit();
            return 0;
        }

        if (ss->parsed()) {
            const auto cases = search_cases();
            if (s_list) {
                for (std::size_t i = 0; i < cases.size(); ++i) {
                    const SearchCase& c = cases[i];
                    std::cout << i << ": seed " << c.M;
                    if (c.N1 > 0) std::cout << " + " << c.N1 << "x" << *c.M1;
                    std::cout << " + " << c.N2 << "x" << c.M2 << "\n";
                }
                return 0;
            }
            if (s_case < 0 || s_case >= static_cast<int>(cases.size())) {
                std::cerr << "search: --case out of range (see --list)\n";
                return 2;
            }
            RunReport rep("search");
            rep.out_path = report_path;
            rep.param("case", s_case);
            rep.param("n", s_n);
            rep.param("jobs", s_jobs);
            RunCaseOptions opts;
            if (!s_orders.empty()) opts.orders = parse_orders(s_orders);
            if (s_seed_class >= 0) opts.seed_class = s_seed_class;
            if (!s_checkpoint.empty()) opts.checkpoint_dir = s_checkpoint;
            opts.jobs = s_jobs;
            opts.log = [](const std::string& m) { std::cerr << m << "\n"; };
            std::map<int, ClassificationResult> cache;
            auto classes_of_size = [&](int m) -> ClassificationResult {
                auto it = cache.find(m);
                if (it != cache.end()) return it->second;
                std::cerr << "classifying (" << s_n << "," << m << ",4) codes...\n";
                return cache[m] = classify_codes(s_n, m, 4);
            };
            auto records = run_case(cases[s_case], s_n, classes_of_size, opts);
            std::vector<Partition> all;
            for (const auto& r : records) all.insert(all.end(), r.found.begin(), r.found.end());
            auto reps = reject_isomorphs(all);
            std::cout << all.size() << " partitions from " << records.size()
                      << " (seed, subgroup) pairs; " << reps.size() << " up to isomorphism\n";
            if (!s_out.empty()) {
                std::filesystem::create_directories(s_out);
                for (std::size_t i = 0; i < reps.size(); ++i) {
                    char name[32];
                    std::snprintf(name, sizeof(name), "partition_%04zu.txt", i);
                    write_partition_file((std::filesystem::path(s_out) / name).string(),
                                         {reps[i].first, {}, reps[i].second});
                }
                rep.output(s_out);
            }
            rep.j["result"] = {{"partitions", all.size()}, {"classes", reps.size()}};
            rep.emit();
            return 0;
        }

        if (sv->parsed()) {
            RunReport rep("verify");
            rep.out_path = report_path;
            if (v_doubling >= 0) {
                std::cout << theorem_doubling_statement(v_doubling) << "\n";
                rep.param("doubling", v_doubling);
                rep.j["result"] = {{"statement", theorem_doubling_statement(v_doubling)}};
                rep.emit();
                return 0;
            }
            Partition p;
            std::vector<Isometry> gens;
            if (v_builtin) {
                p = certificate_partition();
                gens = {certificate_g1(), certificate_g2()};
                rep.param("builtin", true);
            } else if (!v_file.empty()) {
                rep.input(v_file);
                PartitionFile pf = read_partition_file(v_file);
                p = pf.partition;
                gens = pf.generators;
            } else {
                std::cerr << "verify: give a file, --builtin-certificate, or --doubling\n";
                return 2;
            }
            VerifyReport r = verify_partition(p, gens);
            std::cout << r.statement << "\n";
            std::cout << "admissible: " << r.admissible << "\ncovers: " << r.covers_space
                      << "\ngenerators fix partition: " << r.generators_are_automorphisms
                      << "\n|Aut|: " << r.aut_order << "\n";
            rep.j["result"] = {{"ok", r.ok()},
                               {"aut_order", r.aut_order},
                               {"distribution", r.distribution},
                               {"settled", r.chromatic_number_settled}};
            rep.emit();
            return r.ok() ? 0 : 1;
        }

        if (sd->parsed()) {
            if (!d_sandbox) {
                std::cerr << "doublecount: only --sandbox is available\n";
                return 2;
            }
            RunReport rep("doublecount");
            rep.out_path = report_path;
            rep.param("sandbox", true);
            SandboxResult r = run_sandbox_e7();
            std::cout << "by partition: " << r.ledger.by_partition << "\n"
                      << "by seed:      " << r.ledger.by_seed << "\n"
                      << (r.ledger.consistent() ? "consistent" : "MISMATCH") << "\n";
            rep.j["result"] = {{"by_partition", r.ledger.by_partition.str()},
                               {"by_seed", r.ledger.by_seed.str()},
                               {"consistent", r.ledger.consistent()}};
            rep.emit();
            return r.ledger.consistent() ? 0 : 1;
        }

        if (se->parsed()) {
            RunReport rep("extend");
            rep.out_path = report_path;
            rep.input(e_file);
            PartitionFile pf = read_partition_file(e_file);
            ExtendOptions opts;
            opts.first_only = !e_all;
            opts.jobs = e_jobs;
            opts.progress = [](int tuple, long long found) {
                std::cerr << "\rtuple " << tuple << ", " << found << " extensions" << std::flush;
            };
            ExtendResult r = extend_partition(pf.partition, opts);
            std::cerr << "\n";
            std::cout << (r.extension ? "extension exists" : "no extension") << " ("
                      << r.tuples_tried << " size tuples tried, " << r.extensions_found
                      << " found)\n";
            if (r.extension && !e_out.empty()) {
                write_partition_file(e_out, {*r.extension, {}, std::nullopt});
                rep.output(e_out);
            }
            rep.j["result"] = {{"extension_exists", bool(r.extension)},
                               {"tuples_tried", r.tuples_tried},
                               {"extensions_found", r.extensions_found}};
            rep.emit();
            return r.extension ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "hc: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
