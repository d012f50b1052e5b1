// Command-line surface: statistics, decompositions, bijections, exact
// generating polynomials, claim suites, and bijection-table exchange.
// Every invocation is reproducible: identical inputs give byte-identical
// output.  Exit codes: 0 ok, 1 failed binding check, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "permstat/verifier.hpp"

namespace {

using namespace permstat;

std::string comma_word(const Word& w) {
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(w[i]);
    }
    return out;
}

std::string stat_value(const std::string& name, const Permutation& p) {
    if (name == "fix") return std::to_string(fix(p));
    if (name == "FIX") return to_string(fix_set(p));
    if (name == "des") return std::to_string(des(p));
    if (name == "DES") return to_string(des_set(p));
    if (name == "maj") return std::to_string(maj(p));
    if (name == "imaj") return std::to_string(imaj(p));
    if (name == "IDES") return to_string(ides_set(p));
    if (name == "inv") return std::to_string(inv(p));
    if (name == "dez") return std::to_string(dez(p));
    if (name == "DEZ") return to_string(dez_set(p));
    if (name == "maz") return std::to_string(maz(p));
    if (name == "maf") return std::to_string(maf(p));
    if (name == "pix") return std::to_string(pix(p));
    if (name == "PIX") return to_string(pix_set(p));
    if (name == "mag") return std::to_string(mag(p));
    if (name == "Der") return comma_word(fixed_decomposition(p).derangement_part.word());
    if (name == "Desar") return comma_word(pixed_decomposition(p).desarrangement_part.word());
    throw PreconditionError("unknown statistic '" + name + "'");
}

std::vector<Permutation> gather_inputs(const std::string& perm_text,
                                       const std::string& file) {
    std::vector<Permutation> out;
    if (!perm_text.empty()) out.push_back(parse_permutation(perm_text));
    if (!file.empty()) {
        std::ifstream is(file);
        if (!is) throw PreconditionError("cannot open input file " + file);
        std::string line;
        while (std::getline(is, line)) {
            if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
            out.push_back(parse_permutation(line));
        }
    }
    if (out.empty())
        throw PreconditionError("no input permutation: pass --perm or --file");
    return out;
}

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

int run_stat(const std::string& perm_text, const std::string& file,
             const std::string& stats_csv) {
    const std::vector<std::string> names = split_csv(stats_csv);
    if (names.empty()) throw PreconditionError("--stats must name at least one statistic");
    for (const Permutation& p : gather_inputs(perm_text, file)) {
        std::string line;
        for (const auto& name : names) {
            if (!line.empty()) line += ' ';
            line += name + "=" + stat_value(name, p);
        }
        std::cout << line << '\n';
    }
    return 0;
}

int run_decomp(const std::string& perm_text, const std::string& file,
               const std::string& kind) {
    for (const Permutation& p : gather_inputs(perm_text, file)) {
        if (kind == "fixed") {
            const FixedDecomposition d = fixed_decomposition(p);
            std::cout << "FIX=" << to_string(d.fix_set)
                      << " Der=" << comma_word(d.derangement_part.word()) << '\n';
        } else if (kind == "pixed") {
            const PixedDecomposition d = pixed_decomposition(p);
            std::cout << "PIX=" << to_string(d.pix_set)
                      << " Desar=" << comma_word(d.desarrangement_part.word()) << '\n';
        } else if (kind == "zder") {
            std::cout << to_string(zder(p)) << '\n';
        } else {
            std::cout << to_string(zdesar(p)) << '\n';
        }
    }
    return 0;
}

std::vector<std::pair<Permutation, Permutation>> load_perm_pairs(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw PreconditionError("cannot open table file " + path);
    return read_permutation_pairs(is);
}

std::vector<std::pair<ZeroWord, ZeroWord>> load_word_pairs(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw PreconditionError("cannot open table file " + path);
    return read_zero_word_pairs(is);
}

StatTransportSpec<Permutation> phi_spec() {
    StatTransportSpec<Permutation> spec;
    spec.source_stat = phi_source_key;
    spec.target_stat = phi_target_key;
    return spec;
}

StatTransportSpec<Permutation> chz_spec() {
    StatTransportSpec<Permutation> spec;
    spec.grouping_key = chz_group_key;
    spec.source_stat = [](const Permutation& p) { return std::to_string(maf(p)); };
    spec.target_stat = [](const Permutation& p) { return std::to_string(maj(p)); };
    return spec;
}

int run_bij(const std::string& map, const std::string& perm_text, const std::string& file,
            const std::string& base) {
    DwOracle dw;
    WordOracle words;
    if (!base.empty()) {
        if (map == "dwloc")
            register_dw_pairs(dw, load_perm_pairs(base));
        else if (map == "f3" || map == "f3p")
            register_f3_pairs(words, load_word_pairs(base));
    }
    std::map<int, BijectionTable<Permutation>> sn_tables;  // for phi / chz
    auto sn_table = [&](int n) -> const BijectionTable<Permutation>& {
        const auto it = sn_tables.find(n);
        if (it != sn_tables.end()) return it->second;
        BijectionTable<Permutation> t;
        if (!base.empty())
            t = validate_sn_table(n, load_perm_pairs(base),
                                  map == "phi" ? phi_spec() : chz_spec(), map + "-import");
        else
            t = map == "phi" ? phi_oracle(n) : chz_oracle(n);
        return sn_tables.emplace(n, std::move(t)).first->second;
    };

    for (const Permutation& p : gather_inputs(perm_text, file)) {
        Permutation image;
        if (map == "f2") image = f2(p);
        else if (map == "f2p") image = f2_prime(p);
        else if (map == "f2loc") image = f2_loc(p);
        else if (map == "dwloc") image = dw_loc(p, dw);
        else if (map == "f3") image = f3(p, words);
        else if (map == "f3p") image = f3_prime(p, words);
        else image = sn_table(p.order()).apply(p);
        std::cout << to_string(image) << '\n';
    }
    return 0;
}

int run_poly(int n, const std::string& mode) {
    ExactPolynomial out;
    if (mode == "gf-t") out = gf_coefficients_t(n).back();
    else if (mode == "gf-q") out = gf_coefficients_q(n).back();
    else if (mode == "comb-triple") out = combinatorial_gf(n, GfMode::triple);
    else out = combinatorial_gf(n, GfMode::pair);
    std::cout << out.str() << '\n';
    return 0;
}

int run_oracle_export(const std::string& map, int n, const std::string& pos,
                      const std::string& out_path) {
    std::ostringstream body;
    if (map == "dw") {
        DwOracle dw;
        export_table(body, dw.table(n));
    } else if (map == "phi") {
        export_table(body, phi_oracle(n));
    } else if (map == "chz") {
        export_table(body, chz_oracle(n));
    } else {  // f3w
        WordOracle words;
        const ShuffleClassId id{n, pos.empty() ? Word{} : parse_permutation(pos).word()};
        export_table(body, words.table(id));
    }
    if (out_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream os(out_path);
        if (!os) throw PreconditionError("cannot open output file " + out_path);
        os << body.str();
    }
    return 0;
}

int run_oracle_import(const std::string& map, const std::string& path) {
    try {
        if (map == "dw") {
            DwOracle dw;
            const auto pairs = load_perm_pairs(path);
            register_dw_pairs(dw, pairs);
            std::cout << "ok: " << pairs.size() << " pairs accepted\n";
        } else if (map == "phi" || map == "chz") {
            const auto pairs = load_perm_pairs(path);
            if (pairs.empty()) throw PreconditionError("empty table");
            const int n = pairs.front().first.order();
            validate_sn_table(n, pairs, map == "phi" ? phi_spec() : chz_spec(),
                              map + "-import");
            std::cout << "ok: " << pairs.size() << " pairs accepted\n";
        } else {
            WordOracle words;
            const auto pairs = load_word_pairs(path);
            register_f3_pairs(words, pairs);
            std::cout << "ok: " << pairs.size() << " pairs accepted\n";
        }
    } catch (const ParseError& e) {
        std::cerr << "import rejected: " << e.what() << '\n';
        return 1;
    } catch (const PreconditionError& e) {
        std::cerr << "import rejected: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

int run_verify(const std::string& suite, int nmax, const std::string& report_path,
               int max_n, const std::string& dw_base, const std::string& f3_base) {
    if (max_n > 0) set_enumeration_limit(max_n);
    SuiteOptions opts;
    opts.n_max = nmax;
    DwOracle dw;
    WordOracle words;
    if (!dw_base.empty()) {
        register_dw_pairs(dw, load_perm_pairs(dw_base));
        opts.dw = &dw;
    }
    if (!f3_base.empty()) {
        register_f3_pairs(words, load_word_pairs(f3_base));
        opts.f3_words = &words;
    }
    std::vector<VerificationReport> reports;
    auto append = [&reports](std::vector<VerificationReport> batch) {
        for (auto& r : batch) reports.push_back(std::move(r));
    };
    if (suite == "thm1.1" || suite == "all") append(check_theorem_1_1(opts));
    if (suite == "thm1.2" || suite == "all") append(check_theorem_1_2(opts));
    if (suite == "thm1.3" || suite == "all") append(check_theorem_1_3(opts));
    if (suite == "props" || suite == "all") append(check_propositions(opts));

    for (const auto& r : reports) std::cout << human_line(r) << '\n';
    const bool ok = all_binding_pass(reports);
    std::cout << (ok ? "all binding checks pass" : "BINDING CHECK FAILED") << '\n';

    if (!report_path.empty()) {
        std::ofstream os(report_path);
        if (!os) throw PreconditionError("cannot open report file " + report_path);
        for (const auto& r : reports) os << machine_record(r) << '\n';
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for fixed/pixed permutation statistics"};
    app.require_subcommand(1);

    std::string perm_text, input_file, stats_csv, kind, map, base, pos, out_path;
    std::string suite = "all", report_path, table_file;
    int n = 0, nmax = 7, max_n = 0;
    std::string dw_base, f3_base;

    auto* stat = app.add_subcommand("stat", "print named statistics of permutations");
    stat->add_option("--perm", perm_text, "permutation, one-line notation");
    stat->add_option("--file", input_file, "file with one permutation per line");
    stat->add_option("--stats", stats_csv, "comma-separated statistic names")->required();

    auto* decomp = app.add_subcommand("decomp", "print a decomposition or encoding");
    decomp->add_option("--perm", perm_text, "permutation, one-line notation");
    decomp->add_option("--file", input_file, "file with one permutation per line");
    decomp->add_option("--kind", kind, "fixed|pixed|zder|zdesar")
        ->required()
        ->check(CLI::IsMember({"fixed", "pixed", "zder", "zdesar"}));

    auto* bij = app.add_subcommand("bij", "apply a bijection");
    bij->add_option("--map", map, "f2|f2p|f2loc|dwloc|f3|f3p|phi|chz")
        ->required()
        ->check(CLI::IsMember({"f2", "f2p", "f2loc", "dwloc", "f3", "f3p", "phi", "chz"}));
    bij->add_option("--perm", perm_text, "permutation, one-line notation");
    bij->add_option("--file", input_file, "file with one permutation per line");
    bij->add_option("--base", base, "two-column table file backing the lifted map");

    auto* poly = app.add_subcommand("poly", "print an exact generating polynomial");
    poly->add_option("--n", n, "order")->required()->check(CLI::NonNegativeNumber);
    poly->add_option("--mode", kind, "gf-t|gf-q|comb-triple|comb-pair")
        ->required()
        ->check(CLI::IsMember({"gf-t", "gf-q", "comb-triple", "comb-pair"}));

    auto* verify = app.add_subcommand("verify", "run claim suites");
    verify->add_option("--suite", suite, "thm1.1|thm1.2|thm1.3|props|all")
        ->check(CLI::IsMember({"thm1.1", "thm1.2", "thm1.3", "props", "all"}));
    verify->add_option("--nmax", nmax, "largest order checked (default 7)");
    verify->add_option("--report", report_path, "write machine-readable records here");
    verify->add_option("--max-n", max_n, "raise the enumeration budget");
    verify->add_option("--dw-base", dw_base, "plug-in table file for the lifted map");
    verify->add_option("--f3-base", f3_base, "plug-in shuffle-class table file");

    auto* oexp = app.add_subcommand("oracle-export", "write a bijection table as text");
    oexp->add_option("--map", map, "dw|phi|chz|f3w")
        ->required()
        ->check(CLI::IsMember({"dw", "phi", "chz", "f3w"}));
    oexp->add_option("--n", n, "order / total class length")->required();
    oexp->add_option("--pos", pos, "positive word of the shuffle class (f3w)");
    oexp->add_option("--out", out_path, "output file (default stdout)");

    auto* oimp = app.add_subcommand("oracle-import", "validate a bijection table file");
    oimp->add_option("--map", map, "dw|phi|chz|f3w")
        ->required()
        ->check(CLI::IsMember({"dw", "phi", "chz", "f3w"}));
    oimp->add_option("--file", table_file, "table file to validate")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (stat->parsed()) return run_stat(perm_text, input_file, stats_csv);
        if (decomp->parsed()) return run_decomp(perm_text, input_file, kind);
        if (bij->parsed()) return run_bij(map, perm_text, input_file, base);
        if (poly->parsed()) return run_poly(n, kind);
        if (verify->parsed())
            return run_verify(suite, nmax, report_path, max_n, dw_base, f3_base);
        if (oexp->parsed()) return run_oracle_export(map, n, pos, out_path);
        if (oimp->parsed()) return run_oracle_import(map, table_file);
    } catch (const permstat::ParseError& e) {
        std::cerr << "error: " << e.what() << " (position " << e.position << ")\n";
        return 2;
    } catch (const permstat::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const permstat::FiberMismatch& e) {
        std::cerr << "refuted: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
