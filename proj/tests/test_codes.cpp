#include <stdexcept>
#include "dnacyclic/codes.hpp"

#include <set>
#include <sstream>

#include "doctest.h"
#include "dnacyclic/crt.hpp"

using namespace dnacyclic;

namespace {

PolyF2 bits(const char* s) { return poly_from_bitstring(s); }

CodeSpec r1_odd(int n, const char* g, const char* a) {
    CodeSpec s;
    s.form = CodeForm::R1Odd;
    s.n = n;
    s.g = bits(g);
    s.a = bits(a);
    return s;
}

CodeSpec rcrt_all(int n, const char* f) {
    CodeSpec s;
    s.form = CodeForm::RCrt;
    s.n = n;
    s.g1 = s.a1 = s.g1p = s.a1p = s.g2 = s.a2 = bits(f);
    return s;
}

// Naive ideal closure: close the generators under addition, every ring
// scalar, and the cyclic shift.  The enumeration oracle for tiny codes.
template <class E>
std::set<std::vector<E>> ideal_closure(const std::vector<Poly<E>>& gens, int n) {
    std::set<std::vector<E>> words;
    words.insert(std::vector<E>(static_cast<std::size_t>(n), E::zero()));
    for (const Poly<E>& gen : gens) {
        const Poly<E> red = reduce_mod_xn1(gen, n);
        std::vector<E> w(static_cast<std::size_t>(n), E::zero());
        for (int i = 0; i <= red.degree(); ++i) w[static_cast<std::size_t>(i)] = red.coeff(i);
        words.insert(std::move(w));
    }
    bool changed = true;
    while (changed) {
        changed = false;
        const std::vector<std::vector<E>> snapshot(words.begin(), words.end());
        for (const auto& w : snapshot) {
            std::vector<E> shifted(w.size());
            for (std::size_t i = 0; i < w.size(); ++i) shifted[(i + 1) % w.size()] = w[i];
            if (words.insert(shifted).second) changed = true;
            for (E s : all_elements<E>()) {
                std::vector<E> scaled(w.size());
                for (std::size_t i = 0; i < w.size(); ++i) scaled[i] = s * w[i];
                if (words.insert(scaled).second) changed = true;
            }
            for (const auto& w2 : snapshot) {
                std::vector<E> sum(w.size());
                for (std::size_t i = 0; i < w.size(); ++i) sum[i] = w[i] + w2[i];
                if (words.insert(sum).second) changed = true;
            }
        }
    }
    return words;
}

}  // namespace

TEST_CASE("spec parsing and formatting round-trip") {
    const char* text =
        "# comment\n"
        "ring=r\n"
        "form=r-crt\n"
        "n=3\n"
        "g1=11\ng2=11\ng1p=11\na1=11\na2=11\na1p=11\n";
    std::istringstream in(text);
    const CodeSpec spec = parse_code_spec(in);
    CHECK(spec.form == CodeForm::RCrt);
    CHECK(spec.n == 3);
    CHECK(spec.g2 == bits("11"));
    std::istringstream again(format_code_spec(spec));
    const CodeSpec spec2 = parse_code_spec(again);
    CHECK(spec2.form == spec.form);
    CHECK(spec2.g1 == spec.g1);

    std::istringstream bad1("form=r1-odd\nn=3\nbogus=1\n");
    CHECK_THROWS_AS(parse_code_spec(bad1), CodeSpecError);
    std::istringstream bad2("ring=rw\nform=r1-odd\nn=3\ng=11\na=11\n");
    CHECK_THROWS_AS(parse_code_spec(bad2), CodeSpecError);
}

TEST_CASE("validation reports the failed chain") {
    // a does not divide g
    CodeSpec s = r1_odd(3, "11", "111");
    CHECK_THROWS_WITH_AS(validate(s), doctest::Contains("a does not divide g"), CodeSpecError);
    // g does not divide x^n - 1
    s = r1_odd(3, "101", "1");
    CHECK_THROWS_WITH_AS(validate(s), doctest::Contains("x^n-1"), CodeSpecError);
    // parity
    s = r1_odd(4, "11", "11");
    CHECK_THROWS_WITH_AS(validate(s), doctest::Contains("odd"), CodeSpecError);
    // relaxation demotes chain failures to warnings, never parity
    s = r1_odd(3, "11", "111");
    const auto warnings = validate(s, /*relax_chains=*/true);
    CHECK(warnings.size() == 1);
    s = r1_odd(4, "11", "11");
    CHECK_THROWS_AS(validate(s, true), CodeSpecError);
}

TEST_CASE("two-generator form degree conditions") {
    CodeSpec s;
    s.form = CodeForm::R1EvenTwoGen;
    s.n = 6;
    s.g = bits("11011");   // (x+1)^2 (x^2+x+1), degree 4
    s.a = bits("111");     // x^2+x+1
    s.p = bits("11");      // degree 1 < deg a
    CHECK(validate(s).empty());
    s.p = bits("111");  // deg p = deg a
    CHECK_THROWS_WITH_AS(validate(s), doctest::Contains("deg a <= deg p"), CodeSpecError);
    // deg g = deg a passes with a warning
    s = CodeSpec{};
    s.form = CodeForm::R1EvenTwoGen;
    s.n = 6;
    s.g = bits("11011");
    s.a = bits("11011");
    const auto warnings = validate(s);
    CHECK(warnings.size() == 1);
    CHECK(warnings.front().find("deg g = deg a") != std::string::npos);
}

TEST_CASE("generator assembly") {
    // <g, (1+u)a> with g = a = x+1 assembles to u(x+1)
    const CyclicCode c1 = CyclicCode::build(r1_odd(3, "11", "11"));
    CHECK((c1.generator<R1Elem>() == PolyR1{{R1Elem::u(), R1Elem::u()}}));
    // the r-crt assembly with all six generators x+1 is (u+uv+uv^2)(1+x)
    const CyclicCode c2 = CyclicCode::build(rcrt_all(3, "11"));
    const RElem m = r_parse_name("u+uv+uv^2");
    CHECK((c2.generator<RElem>() == PolyR{{m, m}}));
    // g = a = x^n - 1 assembles to the zero generator: the zero code
    const CyclicCode c3 = CyclicCode::build(r1_odd(3, "1001", "1001"));
    const auto set3 = std::get<Codewords<R1Elem>>(enumerate(c3));
    CHECK(set3.words.size() == 1);
    CHECK(set3.dimension() == 0);
}

TEST_CASE("enumeration equals the ideal closure on tiny codes") {
    // <u(x+1)> over R1, n = 3
    const CyclicCode code = CyclicCode::build(r1_odd(3, "11", "11"));
    const auto set = std::get<Codewords<R1Elem>>(enumerate(code));
    const auto closure =
        ideal_closure(std::get<std::vector<PolyR1>>(code.generators()), 3);
    CHECK(set.words.size() == closure.size());
    CHECK(std::set<std::vector<R1Elem>>(set.words.begin(), set.words.end()) == closure);

    // the reference length-3 code over R
    const CyclicCode rcode = CyclicCode::build(rcrt_all(3, "111"));
    const auto rset = std::get<Codewords<RElem>>(enumerate(rcode));
    const auto rclosure =
        ideal_closure(std::get<std::vector<PolyR>>(rcode.generators()), 3);
    CHECK(rset.words.size() == rclosure.size());
    CHECK(std::set<std::vector<RElem>>(rset.words.begin(), rset.words.end()) == rclosure);

    // a two-generator even code over R1
    CodeSpec tg;
    tg.form = CodeForm::R1EvenTwoGen;
    tg.n = 4;
    tg.g = bits("101");  // (x+1)^2
    tg.a = bits("11");
    const CyclicCode tcode = CyclicCode::build(tg);
    const auto tset = std::get<Codewords<R1Elem>>(enumerate(tcode));
    const auto tclosure =
        ideal_closure(std::get<std::vector<PolyR1>>(tcode.generators()), 4);
    CHECK(tset.words.size() == tclosure.size());
}

TEST_CASE("the reference length-3 code has 64 constant codewords") {
    const auto set = std::get<Codewords<RElem>>(enumerate(CyclicCode::build(rcrt_all(3, "111"))));
    CHECK(set.words.size() == 64);
    for (const auto& w : set.words) {
        CHECK(w[0] == w[1]);
        CHECK(w[1] == w[2]);
    }
}

TEST_CASE("membership") {
    const CyclicCode code = CyclicCode::build(rcrt_all(3, "11"));
    const auto set = std::get<Codewords<RElem>>(enumerate(code));
    CHECK(set.contains(std::vector<RElem>(3, RElem::zero())));
    CHECK_FALSE(set.contains(std::vector<RElem>(3, RElem::one())));
    const PolyR& gen = code.generator<RElem>();
    std::vector<RElem> gv(3, RElem::zero());
    for (int i = 0; i <= gen.degree(); ++i) gv[static_cast<std::size_t>(i)] = gen.coeff(i);
    CHECK(set.contains(gv));
    CHECK_THROWS_AS(set.contains(std::vector<RElem>(2)), std::invalid_argument);
}

TEST_CASE("size formula matches enumeration for valid chains") {
    CHECK(size_formula_r1(3, bits("11"), bits("11")) == 16);
    CHECK(size_formula_r1(3, bits("1001"), bits("1001")) == 1);
    // n = 6: a valid pair with deg g = deg a = 4 gives 16 both ways
    CHECK(size_formula_r1(6, bits("11011"), bits("11011")) == 16);
    CodeSpec even;
    even.form = CodeForm::R1EvenTwoGen;
    even.n = 6;
    even.g = even.a = bits("11011");
    const auto even_set = std::get<Codewords<R1Elem>>(enumerate(CyclicCode::build(even)));
    CHECK(even_set.words.size() == 16);

    // it rejects a broken chain instead of returning a wrong count
    CHECK_THROWS_AS(size_formula_r1(6, bits("11011"), bits("10101")), CodeSpecError);

    for (int n : {3, 5, 7}) {
        const auto divs = divisors_of_xn_minus_one(n);
        for (const auto& g : divs)
            for (const auto& a : divs) {
                if (!divides(a, g)) continue;
                const auto set =
                    std::get<Codewords<R1Elem>>(enumerate(CyclicCode::build(r1_odd(
                        n, to_bitstring(g).c_str(), to_bitstring(a).c_str()))));
                CHECK(set.words.size() == size_formula_r1(n, g, a));
            }
    }
}

TEST_CASE("minimum distance and shift closure") {
    const auto rep = std::get<Codewords<RElem>>(enumerate(CyclicCode::build(rcrt_all(3, "111"))));
    CHECK(min_hamming_distance(rep) == 3);
    CHECK(shift_closed(rep));

    // pairwise cross-check on the same small set
    int pairwise = rep.n + 1;
    for (const auto& x : rep.words)
        for (const auto& y : rep.words) {
            if (x == y) continue;
            int d = 0;
            for (std::size_t i = 0; i < x.size(); ++i)
                if (!(x[i] == y[i])) ++d;
            pairwise = std::min(pairwise, d);
        }
    CHECK(pairwise == min_hamming_distance(rep));

    // the full space has distance 1
    const auto full = std::get<Codewords<RElem>>(enumerate(CyclicCode::build(rcrt_all(3, "1"))));
    CHECK(full.words.size() == 64 * 64 * 64);
    CHECK(min_hamming_distance(full) == 1);

    // the zero code has no nonzero word
    const auto zero =
        std::get<Codewords<R1Elem>>(enumerate(CyclicCode::build(r1_odd(3, "1001", "1001"))));
    CHECK_THROWS_AS(min_hamming_distance(zero), std::domain_error);
    CHECK(shift_closed(zero));

    // a hand-made non-ideal set is not shift closed
    Codewords<R1Elem> manual;
    manual.n = 3;
    manual.words = {std::vector<R1Elem>(3, R1Elem::zero()),
                    {R1Elem::one(), R1Elem::zero(), R1Elem::zero()}};
    std::sort(manual.words.begin(), manual.words.end());
    CHECK_FALSE(shift_closed(manual));
}

TEST_CASE("every enumerated code is closed under scalars and shifts") {
    for (const char* f : {"11", "111", "1001"}) {
        const auto set = std::get<Codewords<RElem>>(enumerate(CyclicCode::build(rcrt_all(3, f))));
        CHECK(shift_closed(set));
        for (const auto& w : set.words) {
            for (RElem s : all_elements<RElem>()) {
                std::vector<RElem> scaled(w.size());
                for (std::size_t i = 0; i < w.size(); ++i) scaled[i] = s * w[i];
                CHECK(set.contains(scaled));
            }
        }
    }
}

TEST_CASE("r-crt codewords split onto the component codes") {
    // Every codeword of C = combine(C2, Cw) splits to a pair of component
    // codewords, and every pair combines back into C.
    CodeSpec spec;
    spec.form = CodeForm::RCrt;
    spec.n = 3;
    spec.g2 = bits("111");
    spec.a2 = bits("111");
    spec.g1 = bits("11");
    spec.a1 = bits("11");
    spec.g1p = bits("1");
    spec.a1p = bits("1");
    const CyclicCode code = CyclicCode::build(spec);
    const auto set = std::get<Codewords<RElem>>(enumerate(code));

    CodeSpec s2;
    s2.form = CodeForm::R1Odd;
    s2.n = 3;
    s2.g = spec.g2;
    s2.a = spec.a2;
    const auto c2 = std::get<Codewords<R1Elem>>(enumerate(CyclicCode::build(s2)));
    CodeSpec sw;
    sw.form = CodeForm::Rw;
    sw.n = 3;
    sw.g1 = spec.g1;
    sw.a1 = spec.a1;
    sw.g1p = spec.g1p;
    sw.a1p = spec.a1p;
    const auto cw = std::get<Codewords<RwElem>>(enumerate(CyclicCode::build(sw)));

    CHECK(set.words.size() == c2.words.size() * cw.words.size());
    for (const auto& w : set.words) {
        const auto [first, second] = crt_split_vector(w);
        CHECK(c2.contains(first));
        CHECK(cw.contains(second));
    }
    for (const auto& f : c2.words)
        for (const auto& s : cw.words) CHECK(set.contains(crt_combine_vector(f, s)));
}

TEST_CASE("dimension cap") {
    CHECK_THROWS_AS(enumerate(CyclicCode::build(rcrt_all(3, "1")), 17), DimensionCapExceeded);
    try {
        enumerate(CyclicCode::build(rcrt_all(3, "1")), 17);
    } catch (const DimensionCapExceeded& e) {
        CHECK(e.dimension == 18);
        CHECK(e.cap == 17);
    }
}
