#include "dnacyclic/codes.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>

namespace dnacyclic {

RingId CodeSpec::ring() const {
    switch (form) {
        case CodeForm::R1Odd:
        case CodeForm::R1EvenPrincipal:
        case CodeForm::R1EvenTwoGen: return RingId::R1;
        case CodeForm::Rw: return RingId::Rw;
        case CodeForm::RCrt: return RingId::R;
    }
    throw std::logic_error("unreachable");
}

std::string ring_id_name(RingId id) {
    switch (id) {
        case RingId::R1: return "r1";
        case RingId::Rw: return "rw";
        case RingId::R: return "r";
    }
    throw std::logic_error("unreachable");
}

std::string code_form_name(CodeForm form) {
    switch (form) {
        case CodeForm::R1Odd: return "r1-odd";
        case CodeForm::R1EvenPrincipal: return "r1-even-principal";
        case CodeForm::R1EvenTwoGen: return "r1-even-two-gen";
        case CodeForm::Rw: return "rw";
        case CodeForm::RCrt: return "r-crt";
    }
    throw std::logic_error("unreachable");
}

CodeForm code_form_from_name(const std::string& name) {
    if (name == "r1-odd") return CodeForm::R1Odd;
    if (name == "r1-even-principal") return CodeForm::R1EvenPrincipal;
    if (name == "r1-even-two-gen") return CodeForm::R1EvenTwoGen;
    if (name == "rw") return CodeForm::Rw;
    if (name == "r-crt") return CodeForm::RCrt;
    throw CodeSpecError("unknown code form '" + name + "'");
}

CodeSpec parse_code_spec(std::istream& in) {
    CodeSpec spec;
    bool have_ring = false, have_n = false, have_form = false;
    std::string declared_ring;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw CodeSpecError("code spec line " + std::to_string(lineno) +
                                ": expected key=value, got '" + line + "'");
        std::string key = line.substr(first, eq - first);
        std::string value = line.substr(eq + 1);
        while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
        const auto vfirst = value.find_first_not_of(" \t");
        value = vfirst == std::string::npos ? "" : value.substr(vfirst);
        while (!value.empty() && (value.back() == ' ' || value.back() == '\t')) value.pop_back();

        if (key == "ring") {
            declared_ring = value;
            have_ring = true;
        } else if (key == "n") {
            try {
                spec.n = std::stoi(value);
            } catch (const std::exception&) {
                throw CodeSpecError("code spec line " + std::to_string(lineno) +
                                    ": n must be an integer, got '" + value + "'");
            }
            have_n = true;
        } else if (key == "form") {
            spec.form = code_form_from_name(value);
            have_form = true;
        } else if (key == "g") {
            spec.g = poly_from_bitstring(value);
        } else if (key == "a") {
            spec.a = poly_from_bitstring(value);
        } else if (key == "p") {
            spec.p = poly_from_bitstring(value);
        } else if (key == "g1") {
            spec.g1 = poly_from_bitstring(value);
        } else if (key == "a1") {
            spec.a1 = poly_from_bitstring(value);
        } else if (key == "g1p") {
            spec.g1p = poly_from_bitstring(value);
        } else if (key == "a1p") {
            spec.a1p = poly_from_bitstring(value);
        } else if (key == "g2") {
            spec.g2 = poly_from_bitstring(value);
        } else if (key == "a2") {
            spec.a2 = poly_from_bitstring(value);
        } else {
            throw CodeSpecError("code spec line " + std::to_string(lineno) + ": unknown key '" +
                                key + "'");
        }
    }
    if (!have_form) throw CodeSpecError("code spec is missing form=");
    if (!have_n) throw CodeSpecError("code spec is missing n=");
    if (have_ring && declared_ring != ring_id_name(spec.ring()))
        throw CodeSpecError("code spec declares ring=" + declared_ring + " but form " +
                            code_form_name(spec.form) + " lives over " +
                            ring_id_name(spec.ring()));
    return spec;
}

CodeSpec parse_code_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CodeSpecError("cannot open code spec file '" + path + "'");
    return parse_code_spec(in);
}

std::string format_code_spec(const CodeSpec& spec) {
    std::ostringstream out;
    out << "ring=" << ring_id_name(spec.ring()) << "\n";
    out << "form=" << code_form_name(spec.form) << "\n";
    out << "n=" << spec.n << "\n";
    const auto emit = [&out](const char* key, const PolyF2& f) {
        if (!f.is_zero()) out << key << "=" << to_bitstring(f) << "\n";
    };
    switch (spec.form) {
        case CodeForm::R1Odd:
            emit("g", spec.g);
            emit("a", spec.a);
            break;
        case CodeForm::R1EvenPrincipal:
            emit("g", spec.g);
            emit("p", spec.p);
            break;
        case CodeForm::R1EvenTwoGen:
            emit("g", spec.g);
            emit("p", spec.p);
            emit("a", spec.a);
            break;
        case CodeForm::Rw:
            emit("g1", spec.g1);
            emit("a1", spec.a1);
            emit("g1p", spec.g1p);
            emit("a1p", spec.a1p);
            break;
        case CodeForm::RCrt:
            emit("g1", spec.g1);
            emit("a1", spec.a1);
            emit("g1p", spec.g1p);
            emit("a1p", spec.a1p);
            emit("g2", spec.g2);
            emit("a2", spec.a2);
            break;
    }
    return out.str();
}

namespace {

void require_nonzero(const PolyF2& f, const char* name, std::vector<std::string>* errors) {
    if (f.is_zero()) errors->push_back(std::string("generator polynomial ") + name + " is zero");
}

void check_chain(const PolyF2& a, const char* an, const PolyF2& g, const char* gn,
                 std::vector<std::string>* errors) {
    if (a.is_zero() || g.is_zero()) return;  // reported separately
    if (!divides(a, g))
        errors->push_back(std::string("divisibility chain failed: ") + an + " does not divide " +
                          gn + " (" + to_bitstring(a) + " | " + to_bitstring(g) + ")");
}

}  // namespace

std::vector<std::string> validate(const CodeSpec& spec, bool relax_chains) {
    std::vector<std::string> hard;    // never relaxed
    std::vector<std::string> chains;  // relaxable
    std::vector<std::string> warnings;

    if (spec.n < 1) hard.push_back("length n must be positive");
    const bool odd = spec.n % 2 != 0;
    const PolyF2 mod = spec.n >= 1 ? xn_minus_one(spec.n) : PolyF2();

    switch (spec.form) {
        case CodeForm::R1Odd: {
            if (!odd) hard.push_back("form r1-odd requires odd n");
            require_nonzero(spec.g, "g", &hard);
            require_nonzero(spec.a, "a", &hard);
            if (hard.empty()) {
                check_chain(spec.a, "a", spec.g, "g", &chains);
                check_chain(spec.g, "g", mod, "x^n-1", &chains);
            }
            break;
        }
        case CodeForm::R1EvenPrincipal: {
            if (odd) hard.push_back("form r1-even-principal requires even n");
            require_nonzero(spec.g, "g", &hard);
            if (spec.p.degree() >= spec.n)
                hard.push_back("p must have degree < n");
            if (hard.empty()) {
                check_chain(spec.g, "g", mod, "x^n-1", &chains);
                // Theorem form: (g + (1+u)p) divides x^n - 1 over R1.
                PolyR1 gen = lift<R1Elem>(spec.g) + lift<R1Elem>(spec.p).times(R1Elem::one_plus_u());
                bool unit_lead = false;
                if (!gen.is_zero())
                    for (R1Elem m : units<R1Elem>())
                        if (gen.leading() == m) unit_lead = true;
                if (!unit_lead) {
                    chains.push_back("g + (1+u)p has a non-unit leading coefficient; cannot check "
                                     "divisibility over R1");
                } else if (!divmod_unit_lead(lift<R1Elem>(mod), gen).second.is_zero()) {
                    chains.push_back("divisibility chain failed: g + (1+u)p does not divide x^n-1 "
                                     "over R1");
                }
            }
            break;
        }
        case CodeForm::R1EvenTwoGen: {
            if (odd) hard.push_back("form r1-even-two-gen requires even n");
            require_nonzero(spec.g, "g", &hard);
            require_nonzero(spec.a, "a", &hard);
            if (hard.empty()) {
                check_chain(spec.a, "a", spec.g, "g", &chains);
                check_chain(spec.g, "g", mod, "x^n-1", &chains);
                if (!spec.p.is_zero() && divides(spec.g, mod)) {
                    const PolyF2 cofactor = divmod(mod, spec.g).first;
                    if (!divides(spec.a, spec.p * cofactor))
                        chains.push_back(
                            "divisibility chain failed: a does not divide p*((x^n-1)/g)");
                }
                if (spec.g.degree() < spec.a.degree())
                    chains.push_back("degree order violated: deg g < deg a");
                else if (spec.g.degree() == spec.a.degree())
                    warnings.push_back("deg g = deg a (the strict order deg g > deg a is relaxed)");
                if (!spec.p.is_zero() && spec.a.degree() <= spec.p.degree())
                    chains.push_back("degree order violated: deg a <= deg p");
            }
            break;
        }
        case CodeForm::Rw: {
            if (!odd) hard.push_back("form rw requires odd n");
            require_nonzero(spec.g1, "g1", &hard);
            require_nonzero(spec.a1, "a1", &hard);
            require_nonzero(spec.g1p, "g1p", &hard);
            require_nonzero(spec.a1p, "a1p", &hard);
            if (hard.empty()) {
                check_chain(spec.a1, "a1", spec.g1, "g1", &chains);
                check_chain(spec.g1, "g1", mod, "x^n-1", &chains);
                check_chain(spec.a1p, "a1p", spec.g1p, "g1p", &chains);
                check_chain(spec.g1p, "g1p", mod, "x^n-1", &chains);
            }
            break;
        }
        case CodeForm::RCrt: {
            if (!odd) hard.push_back("form r-crt requires odd n");
            require_nonzero(spec.g1, "g1", &hard);
            require_nonzero(spec.a1, "a1", &hard);
            require_nonzero(spec.g1p, "g1p", &hard);
            require_nonzero(spec.a1p, "a1p", &hard);
            require_nonzero(spec.g2, "g2", &hard);
            require_nonzero(spec.a2, "a2", &hard);
            if (hard.empty()) {
                check_chain(spec.a2, "a2", spec.g2, "g2", &chains);
                check_chain(spec.g2, "g2", mod, "x^n-1", &chains);
                check_chain(spec.a1, "a1", spec.g1, "g1", &chains);
                check_chain(spec.g1, "g1", mod, "x^n-1", &chains);
                check_chain(spec.a1p, "a1p", spec.g1p, "g1p", &chains);
                check_chain(spec.g1p, "g1p", mod, "x^n-1", &chains);
            }
            break;
        }
    }

    if (!hard.empty()) throw CodeSpecError(hard.front());
    if (!chains.empty()) {
        if (!relax_chains) throw CodeSpecError(chains.front());
        for (auto& c : chains) warnings.push_back("relaxed: " + c);
    }
    return warnings;
}

namespace {

PolyR1 r1_generator(const PolyF2& g, const PolyF2& a) {
    return lift<R1Elem>(g) + lift<R1Elem>(a).times(R1Elem::one_plus_u());
}

PolyRw rw_generator(const CodeSpec& spec) {
    const PolyR1 rpart = r1_generator(spec.g1, spec.a1);
    const PolyR1 spart = r1_generator(spec.g1p, spec.a1p);
    const int len = std::max(rpart.degree(), spart.degree()) + 1;
    std::vector<RwElem> c;
    c.reserve(static_cast<std::size_t>(std::max(len, 0)));
    for (int i = 0; i < len; ++i) c.emplace_back(rpart.coeff(i), spart.coeff(i));
    return PolyRw(std::move(c));
}

}  // namespace

CyclicCode CyclicCode::build(const CodeSpec& spec, bool relax_chains) {
    CyclicCode code;
    code.spec_ = spec;
    code.warnings_ = validate(spec, relax_chains);
    const int n = spec.n;
    switch (spec.form) {
        case CodeForm::R1Odd: {
            code.gens_ = std::vector<PolyR1>{reduce_mod_xn1(r1_generator(spec.g, spec.a), n)};
            break;
        }
        case CodeForm::R1EvenPrincipal: {
            code.gens_ = std::vector<PolyR1>{reduce_mod_xn1(r1_generator(spec.g, spec.p), n)};
            break;
        }
        case CodeForm::R1EvenTwoGen: {
            code.gens_ = std::vector<PolyR1>{
                reduce_mod_xn1(r1_generator(spec.g, spec.p), n),
                reduce_mod_xn1(lift<R1Elem>(spec.a).times(R1Elem::one_plus_u()), n)};
            break;
        }
        case CodeForm::Rw: {
            code.gens_ = std::vector<PolyRw>{reduce_mod_xn1(rw_generator(spec), n)};
            break;
        }
        case CodeForm::RCrt: {
            const PolyR1 gen2 = reduce_mod_xn1(r1_generator(spec.g2, spec.a2), n);
            const PolyRw genw = reduce_mod_xn1(rw_generator(spec), n);
            code.gens_ = std::vector<PolyR>{crt_combine_poly(gen2, genw)};
            break;
        }
    }
    return code;
}

namespace {

// Dense F2 row over n*kBits columns.
struct BitRow {
    std::vector<std::uint64_t> blocks;
    int lead = -1;

    bool get(int col) const { return (blocks[col >> 6] >> (col & 63)) & 1u; }
    void operator^=(const BitRow& o) {
        for (std::size_t i = 0; i < blocks.size(); ++i) blocks[i] ^= o.blocks[i];
    }
    void refresh_lead(int ncols) {
        lead = -1;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            if (blocks[b]) {
                lead = static_cast<int>(b * 64 + std::countr_zero(blocks[b]));
                break;
            }
        }
        if (lead >= ncols) lead = -1;
    }
};

}  // namespace

template <class E>
Codewords<E> enumerate_span(const std::vector<Poly<E>>& gens, int n, int cap_dim) {
    if (n < 1) throw std::invalid_argument("enumerate_span requires n >= 1");
    const int ncols = n * E::kBits;
    const int nblocks = (ncols + 63) / 64;

    const auto to_row = [&](const std::vector<E>& word) {
        BitRow row;
        row.blocks.assign(static_cast<std::size_t>(nblocks), 0);
        for (int i = 0; i < n; ++i) {
            const unsigned bits = word[static_cast<std::size_t>(i)].bits();
            for (int j = 0; j < E::kBits; ++j)
                if ((bits >> j) & 1u) {
                    const int col = i * E::kBits + j;
                    row.blocks[col >> 6] |= std::uint64_t{1} << (col & 63);
                }
        }
        row.refresh_lead(ncols);
        return row;
    };
    const auto to_word = [&](const BitRow& row) {
        std::vector<E> word(static_cast<std::size_t>(n), E::zero());
        for (int i = 0; i < n; ++i) {
            unsigned bits = 0;
            for (int j = 0; j < E::kBits; ++j)
                if (row.get(i * E::kBits + j)) bits |= 1u << j;
            word[static_cast<std::size_t>(i)] = E::from_bits(bits);
        }
        return word;
    };

    // Reduced row echelon basis, rows kept sorted by pivot column.
    std::vector<BitRow> rref;
    const auto insert_row = [&](BitRow row) {
        for (const BitRow& b : rref)
            if (row.get(b.lead)) row ^= b;
        row.refresh_lead(ncols);
        if (row.lead < 0) return;
        for (BitRow& b : rref)
            if (b.get(row.lead)) b ^= row;
        const auto pos = std::lower_bound(
            rref.begin(), rref.end(), row,
            [](const BitRow& x, const BitRow& y) { return x.lead < y.lead; });
        rref.insert(pos, std::move(row));
    };

    for (const Poly<E>& gen : gens) {
        const Poly<E> reduced = reduce_mod_xn1(gen, n);
        std::vector<E> base(static_cast<std::size_t>(n), E::zero());
        for (int i = 0; i <= reduced.degree(); ++i) base[static_cast<std::size_t>(i)] = reduced.coeff(i);
        for (int k = 0; k < n; ++k) {
            std::vector<E> shifted(static_cast<std::size_t>(n), E::zero());
            for (int i = 0; i < n; ++i)
                shifted[static_cast<std::size_t>((i + k) % n)] = base[static_cast<std::size_t>(i)];
            for (E b : scalar_basis<E>()) {
                std::vector<E> row = shifted;
                for (E& c : row) c = b * c;
                insert_row(to_row(row));
            }
        }
    }

    Codewords<E> out;
    out.n = n;
    const int dim = static_cast<int>(rref.size());
    if (dim > cap_dim) throw DimensionCapExceeded(dim, cap_dim);
    out.basis.reserve(rref.size());
    for (const BitRow& b : rref) out.basis.push_back(to_word(b));

    out.words.reserve(std::size_t{1} << dim);
    BitRow acc;
    acc.blocks.assign(static_cast<std::size_t>(nblocks), 0);
    out.words.push_back(to_word(acc));
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << dim); ++m) {
        acc ^= rref[static_cast<std::size_t>(std::countr_zero(m))];  // Gray-code walk
        out.words.push_back(to_word(acc));
    }
    std::sort(out.words.begin(), out.words.end());
    return out;
}

template Codewords<R1Elem> enumerate_span<R1Elem>(const std::vector<PolyR1>&, int, int);
template Codewords<RwElem> enumerate_span<RwElem>(const std::vector<PolyRw>&, int, int);
template Codewords<RElem> enumerate_span<RElem>(const std::vector<PolyR>&, int, int);

AnyCodewords enumerate(const CyclicCode& code, int cap_dim) {
    const int n = code.n();
    return std::visit(
        [&](const auto& gens) -> AnyCodewords { return enumerate_span(gens, n, cap_dim); },
        code.generators());
}

template <class E>
bool Codewords<E>::contains(const std::vector<E>& w) const {
    if (static_cast<int>(w.size()) != n)
        throw std::invalid_argument("contains: word length mismatch");
    // reduce against the RREF basis over F2 coordinates
    std::vector<E> rem = w;
    for (const std::vector<E>& b : basis) {
        // leading coordinate of b: first nonzero element, lowest set bit
        int lead_i = -1, lead_j = -1;
        for (int i = 0; i < n && lead_i < 0; ++i) {
            const unsigned bits = b[static_cast<std::size_t>(i)].bits();
            if (bits) {
                lead_i = i;
                lead_j = std::countr_zero(bits);
            }
        }
        if (lead_i < 0) continue;
        if ((rem[static_cast<std::size_t>(lead_i)].bits() >> lead_j) & 1u)
            for (int i = 0; i < n; ++i)
                rem[static_cast<std::size_t>(i)] =
                    rem[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(i)];
    }
    return std::all_of(rem.begin(), rem.end(), [](E c) { return c.is_zero(); });
}

template bool Codewords<R1Elem>::contains(const std::vector<R1Elem>&) const;
template bool Codewords<RwElem>::contains(const std::vector<RwElem>&) const;
template bool Codewords<RElem>::contains(const std::vector<RElem>&) const;

std::uint64_t size_formula_r1(int n, const PolyF2& g, const PolyF2& a) {
    if (g.is_zero() || a.is_zero()) throw CodeSpecError("size formula requires nonzero g and a");
    if (!divides(a, g)) throw CodeSpecError("size formula requires a | g");
    if (!divides(g, xn_minus_one(n))) throw CodeSpecError("size formula requires g | x^n-1");
    const int exp = 2 * (n - g.degree()) + (g.degree() - a.degree());
    if (exp >= 64) throw std::overflow_error("code size exceeds 2^63");
    return std::uint64_t{1} << exp;
}

template <class E>
int min_hamming_distance(const Codewords<E>& set) {
    int best = -1;
    for (const std::vector<E>& w : set.words) {
        int weight = 0;
        for (E c : w)
            if (!c.is_zero()) ++weight;
        if (weight > 0 && (best < 0 || weight < best)) best = weight;
    }
    if (best < 0) throw std::domain_error("minimum distance needs at least one nonzero codeword");
    return best;
}

template int min_hamming_distance<R1Elem>(const Codewords<R1Elem>&);
template int min_hamming_distance<RwElem>(const Codewords<RwElem>&);
template int min_hamming_distance<RElem>(const Codewords<RElem>&);

template <class E>
bool shift_closed(const Codewords<E>& set) {
    for (const std::vector<E>& w : set.words) {
        std::vector<E> s(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) s[(i + 1) % w.size()] = w[i];
        if (!std::binary_search(set.words.begin(), set.words.end(), s)) return false;
    }
    return true;
}

template bool shift_closed<R1Elem>(const Codewords<R1Elem>&);
template bool shift_closed<RwElem>(const Codewords<RwElem>&);
template bool shift_closed<RElem>(const Codewords<RElem>&);

}  // namespace dnacyclic
