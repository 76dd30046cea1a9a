// Command-line front end: construction, enumeration, DNA/binary emission,
// constraint checking, table regeneration and the verification suites.
//
// Exit codes: 0 success, 1 failed checks or data errors, 2 usage errors.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dnacyclic/codes.hpp"
#include "dnacyclic/crt.hpp"
#include "dnacyclic/dna.hpp"
#include "dnacyclic/gray.hpp"
#include "dnacyclic/poly.hpp"
#include "dnacyclic/reference_tables.hpp"
#include "dnacyclic/verify.hpp"

namespace {

using namespace dnacyclic;

// Relative output paths are placed under $DNACYCLIC_OUT_DIR when it is set.
std::string resolve_out_path(const std::string& path) {
    const char* dir = std::getenv("DNACYCLIC_OUT_DIR");
    if (dir == nullptr || *dir == '\0' || path.empty()) return path;
    const std::filesystem::path p(path);
    if (p.is_absolute()) return path;
    return (std::filesystem::path(dir) / p).string();
}

// Writes to the -o target, or stdout when none was given.
void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    const std::string resolved = resolve_out_path(out_path);
    std::ofstream out(resolved, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + resolved + "'");
    out << text;
}

template <class E>
std::string word_tsv(const std::vector<E>& w) {
    std::string line;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) line += '\t';
        line += to_bitstring(w[i]);
    }
    return line;
}

std::vector<DnaStrand> read_strand_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open strand file '" + path + "'");
    std::vector<DnaStrand> strands;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        strands.emplace_back(line);
    }
    return strands;
}

std::string render_table(int which) {
    std::ostringstream out;
    const std::vector<RElem> order = table_element_order();
    switch (which) {
        case 1: {
            out << "Table 1. Identifying Codons with the Elements of the Ring and Gray image "
                   "R.\n";
            for (RElem x : order) {
                const auto t = gray_triple(x);
                out << r_name(x) << "\t(" << r1_name(t[0]) << "," << r1_name(t[1]) << ","
                    << r1_name(t[2]) << ")\t" << theta(x) << "\n";
            }
            break;
        }
        case 2: {
            out << "Table 2. Binary Image of the Codons\n";
            for (int row = 0; row < 16; ++row) {
                for (int col = 0; col < 4; ++col) {
                    const RElem x = order[static_cast<std::size_t>(col * 16 + row)];
                    if (col) out << '\t';
                    out << theta(x) << '\t' << to_string(phi(x), /*grouped=*/false);
                }
                out << '\n';
            }
            break;
        }
        case 3: {
            out << "Table 3. All 64 codewords of C\n";
            CodeSpec spec;
            spec.form = CodeForm::RCrt;
            spec.n = 3;
            spec.g1 = spec.a1 = spec.g1p = spec.a1p = spec.g2 = spec.a2 =
                poly_from_bitstring("111");
            const auto set = std::get<Codewords<RElem>>(enumerate(CyclicCode::build(spec)));
            // printed layout: writing each codeword as the constant element
            // a + v b + v^2 c, columns are a in {0, 1+u, u, 1} and rows run
            // over (b, c) in coefficient-bit order
            constexpr unsigned col_of_a[4] = {0, 3, 2, 1};  // a bits -> column
            std::array<std::array<std::string, 4>, 16> grid;
            for (const auto& w : set.words) {
                const std::string s = strand_block_layout(w).str();
                const unsigned a = nt_inv(s[0]).bits();
                const unsigned b = a ^ nt_inv(s[3]).bits();
                const unsigned c = a ^ nt_inv(s[6]).bits();
                auto& cell = grid[b * 4 + c][col_of_a[a]];
                if (!cell.empty()) throw std::logic_error("table 3 grid collision");
                cell = s;
            }
            for (const auto& row : grid) {
                for (std::size_t c = 0; c < 4; ++c) out << (c ? "\t" : "") << row[c];
                out << '\n';
            }
            break;
        }
        case 4: {
            out << "Table 4. A DNA code of length 6 obtained from the above code.\n";
            CodeSpec spec;
            spec.form = CodeForm::R1EvenTwoGen;
            spec.n = 6;
            spec.g = poly_from_bitstring("11011");
            spec.a = poly_from_bitstring("10101");
            const auto set = std::get<Codewords<R1Elem>>(
                enumerate(CyclicCode::build(spec, /*relax_chains=*/true)));
            std::vector<std::string> strands;
            strands.reserve(set.words.size());
            for (const auto& w : set.words) strands.push_back(strand_of_r1(w).str());
            std::sort(strands.begin(), strands.end());
            for (const std::string& s : strands) out << s << '\n';
            break;
        }
        default:
            throw std::runtime_error("tables --which takes 1, 2, 3 or 4");
    }
    return out.str();
}

int run_verify(const std::string& suite, const std::string& allowlist_path, bool tsv,
               bool header, bool split_table, const std::string& out_path) {
    std::ostringstream out;
    bool checks_ok = true;
    ErrataReport report;

    if (split_table) {
        if (header) out << "element\tr1_image\trw_image\n";
        for (unsigned i = 0; i < 64; ++i) {
            const CrtPair p = crt_split(RElem(i));
            out << to_bitstring(RElem(i)) << '\t' << to_bitstring(p.first) << '\t'
                << to_bitstring(p.second) << '\n';
        }
    }

    const auto print_checks = [&out, &checks_ok](const std::vector<CheckResult>& checks) {
        for (const CheckResult& c : checks) {
            out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
            if (!c.pass) checks_ok = false;
        }
    };

    if (suite == "lemmas" || suite == "all") print_checks(run_lemma_checks());
    if (suite == "theorems" || suite == "all") print_checks(run_theorem_checks());
    if (suite == "examples") report = run_errata(ErrataScope::Examples);
    if (suite == "crt") report = run_errata(ErrataScope::Crt);
    if (suite == "all") report = run_errata(ErrataScope::All);

    const std::vector<std::string> allowlist =
        allowlist_path.empty() ? default_errata_allowlist() : load_allowlist(allowlist_path);

    if (!report.findings.empty()) {
        out << (tsv ? report.to_tsv(header) : report.to_text());
        if (!report.clean(allowlist)) {
            out << "mismatch findings outside the errata allowlist\n";
        }
    }
    emit(out_path, out.str());
    return (checks_ok && report.clean(allowlist)) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cyclic DNA codes over the 64-element ring F2[u,v]/<u^2-1, v^3-v>"};
    app.require_subcommand(1);

    std::string spec_path, out_path, strand_path, layout = "def31", constraints_csv,
                suite = "all", allowlist_path, which_table;
    int n = 0, cap = kDefaultDimCap, dmin = 0;
    bool relax = false, no_header = false, tsv = false, split_table = false;

    auto* factor_cmd = app.add_subcommand("factor", "Factor x^n - 1 over F2");
    factor_cmd->add_option("--n", n, "length")->required();
    factor_cmd->add_option("-o,--out", out_path, "output file");

    auto* build_cmd = app.add_subcommand("build", "Validate a code spec and store a handle file");
    build_cmd->add_option("-f,--file", spec_path, "code spec file")->required();
    build_cmd->add_option("-o,--out", out_path, "normalized spec output");
    build_cmd->add_flag("--relax", relax, "demote divisibility-chain violations to warnings");

    auto* enum_cmd = app.add_subcommand("enumerate", "Dump all codewords as TSV");
    enum_cmd->add_option("-f,--file", spec_path, "code spec file")->required();
    enum_cmd->add_option("--cap", cap, "max F2-dimension to materialize (log2 of the count)");
    enum_cmd->add_option("-o,--out", out_path, "output file");
    enum_cmd->add_flag("--relax", relax, "demote divisibility-chain violations to warnings");

    auto* dna_cmd = app.add_subcommand("dna", "Emit the DNA strands of a code");
    dna_cmd->add_option("-f,--file", spec_path, "code spec file")->required();
    dna_cmd->add_option("--layout", layout, "strand layout for R codes: codon or def31")
        ->check(CLI::IsMember({"codon", "def31"}));
    dna_cmd->add_option("--cap", cap, "max F2-dimension to materialize");
    dna_cmd->add_option("-o,--out", out_path, "output file");
    dna_cmd->add_flag("--relax", relax, "demote divisibility-chain violations to warnings");

    auto* image_cmd = app.add_subcommand("image", "Emit the binary Gray image of a code");
    image_cmd->add_option("-f,--file", spec_path, "code spec file")->required();
    image_cmd->add_option("--cap", cap, "max F2-dimension to materialize");
    image_cmd->add_option("-o,--out", out_path, "output file");
    image_cmd->add_flag("--relax", relax, "demote divisibility-chain violations to warnings");

    auto* check_cmd = app.add_subcommand("check", "Check DNA constraints over a strand file");
    check_cmd->add_option("-f,--file", strand_path, "strand file, one strand per line")
        ->required();
    check_cmd->add_option("--d", dmin, "minimum distance d")->required();
    check_cmd->add_option("--constraints", constraints_csv,
                          "comma separated subset of hamming,reverse,rc,gc (default all)");
    check_cmd->add_flag("--no-header", no_header, "omit the TSV header");
    check_cmd->add_option("-o,--out", out_path, "output file");

    auto* tables_cmd = app.add_subcommand("tables", "Regenerate a published reference table");
    tables_cmd->add_option("--which", which_table, "table number 1-4")->required();
    tables_cmd->add_flag("--no-header", no_header, "omit the title line");
    tables_cmd->add_option("-o,--out", out_path, "output file");

    auto* verify_cmd = app.add_subcommand("verify", "Run the verification suites");
    verify_cmd
        ->add_option("--suite", suite, "lemmas | theorems | examples | crt | all (default all)")
        ->check(CLI::IsMember({"lemmas", "theorems", "examples", "crt", "all"}));
    verify_cmd->add_option("--allowlist", allowlist_path, "errata allowlist file");
    verify_cmd->add_flag("--split-table", split_table,
                         "print the 64-row CRT split table before the suite");
    verify_cmd->add_flag("--tsv", tsv, "emit findings as TSV");
    verify_cmd->add_flag("--no-header", no_header, "omit the TSV header");
    verify_cmd->add_option("-o,--out", out_path, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (*factor_cmd) {
            emit(out_path, format_factorization(factor_xn_minus_one(n)) + "\n");
            return 0;
        }
        if (*build_cmd) {
            const CodeSpec spec = parse_code_spec_file(spec_path);
            const CyclicCode code = CyclicCode::build(spec, relax);
            std::ostringstream summary;
            summary << "ring " << ring_id_name(spec.ring()) << ", form "
                    << code_form_name(spec.form) << ", n=" << spec.n << "\n";
            std::visit(
                [&summary](const auto& gens) {
                    for (std::size_t i = 0; i < gens.size(); ++i)
                        summary << "generator " << i + 1 << ": " << poly_to_algebraic(gens[i])
                                << "\n";
                },
                code.generators());
            for (const std::string& w : code.warnings()) summary << "warning: " << w << "\n";
            std::cout << summary.str();
            if (!out_path.empty()) emit(out_path, format_code_spec(spec));
            return 0;
        }
        if (*enum_cmd) {
            const CyclicCode code = CyclicCode::build(parse_code_spec_file(spec_path), relax);
            std::ostringstream out;
            std::visit(
                [&out, &code, cap](const auto& gens) {
                    const auto set = enumerate_span(gens, code.n(), cap);
                    for (const auto& w : set.words) out << word_tsv(w) << "\n";
                },
                code.generators());
            emit(out_path, out.str());
            return 0;
        }
        if (*dna_cmd) {
            const CyclicCode code = CyclicCode::build(parse_code_spec_file(spec_path), relax);
            std::ostringstream out;
            if (code.ring() == RingId::R) {
                const auto set = std::get<Codewords<RElem>>(enumerate(code, cap));
                std::vector<std::string> strands;
                strands.reserve(set.words.size());
                for (const auto& w : set.words)
                    strands.push_back(layout == "codon" ? strand_codon_layout(w).str()
                                                        : strand_block_layout(w).str());
                std::sort(strands.begin(), strands.end());
                for (const auto& s : strands) out << s << "\n";
            } else if (code.ring() == RingId::R1) {
                const auto set = std::get<Codewords<R1Elem>>(enumerate(code, cap));
                std::vector<std::string> strands;
                strands.reserve(set.words.size());
                for (const auto& w : set.words) strands.push_back(strand_of_r1(w).str());
                std::sort(strands.begin(), strands.end());
                for (const auto& s : strands) out << s << "\n";
            } else {
                throw std::runtime_error("no DNA correspondence is defined for Rw codes");
            }
            emit(out_path, out.str());
            return 0;
        }
        if (*image_cmd) {
            const CyclicCode code = CyclicCode::build(parse_code_spec_file(spec_path), relax);
            if (code.ring() != RingId::R)
                throw std::runtime_error("the binary Gray image is defined for R codes");
            const auto set = std::get<Codewords<RElem>>(enumerate(code, cap));
            std::ostringstream out;
            for (const BinaryWord& b : binary_image(set)) out << to_string(b) << "\n";
            emit(out_path, out.str());
            return 0;
        }
        if (*check_cmd) {
            unsigned mask = 0;
            if (constraints_csv.empty()) {
                mask = kAllConstraints;
            } else {
                std::stringstream ss(constraints_csv);
                std::string tok;
                while (std::getline(ss, tok, ',')) {
                    if (tok == "hamming")
                        mask |= kHamming;
                    else if (tok == "reverse")
                        mask |= kReverse;
                    else if (tok == "rc")
                        mask |= kReverseComplement;
                    else if (tok == "gc")
                        mask |= kGcContent;
                    else
                        throw std::runtime_error("unknown constraint '" + tok + "'");
                }
            }
            const auto results = check_constraints(read_strand_file(strand_path), dmin, mask);
            std::ostringstream out;
            if (!no_header) out << "constraint\tresult\twitness_a\twitness_b\n";
            bool all_pass = true;
            for (const ConstraintResult& r : results) {
                out << r.constraint << '\t' << (r.pass ? "pass" : "fail") << '\t' << r.witness_a
                    << '\t' << r.witness_b << '\n';
                all_pass = all_pass && r.pass;
            }
            emit(out_path, out.str());
            return all_pass ? 0 : 1;
        }
        if (*tables_cmd) {
            const int which = std::stoi(which_table);
            std::string text = render_table(which);
            if (no_header) text = text.substr(text.find('\n') + 1);
            emit(out_path, text);
            return 0;
        }
        if (*verify_cmd) {
            return run_verify(suite, allowlist_path, tsv, !no_header, split_table, out_path);
        }
    } catch (const CodeSpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
