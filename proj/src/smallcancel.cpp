#include "cubical/smallcancel.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "cubical/common.hpp"
#include "cubical/io.hpp"

namespace cubical::sc {

namespace {

std::size_t idx(long v) { return static_cast<std::size_t>(v); }

long mod(long x, long p) { return p == 0 ? x : ((x % p) + p) % p; }

bool parse_long(std::string_view t, long& out) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (std::size_t j = i; j < t.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(t[j]))) return false;
    try {
        out = std::stol(std::string(t));
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// a * parameter + b
struct Affine {
    long a = 0, b = 1;
    long at(long v) const { return a * v + b; }
};

struct Node {
    enum Kind { LETTER, SEQ, POWER, COMM } kind = SEQ;
    int gen = -1;
    std::vector<Node> kids;
    Affine exponent;
};

class TemplateParser {
public:
    TemplateParser(std::string_view text, const std::vector<std::string>& generators, const std::string& param)
        : s_(text), gens_(generators), param_(param) {}

    Node parse() {
        Node n = sequence();
        skip();
        if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
        return n;
    }
    bool uses_param() const { return uses_param_; }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw InputError(msg, 0, pos_ + 1); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    Node sequence() {
        Node seq;
        seq.kind = Node::SEQ;
        for (;;) {
            skip();
            if (pos_ >= s_.size() || s_[pos_] == ')' || s_[pos_] == ']' || s_[pos_] == ',') break;
            auto atoms = atom();
            if (peek('^')) {
                ++pos_;
                Node pw;
                pw.kind = Node::POWER;
                pw.exponent = exponent();
                // The exponent binds to the last generator of a run such as "ab".
                pw.kids.push_back(std::move(atoms.back()));
                atoms.back() = std::move(pw);
            }
            for (auto& a : atoms) seq.kids.push_back(std::move(a));
        }
        return seq;
    }

    std::vector<Node> atom() {
        skip();
        if (s_[pos_] == '(') {
            ++pos_;
            Node inner = sequence();
            expect(')');
            return {std::move(inner)};
        }
        if (s_[pos_] == '[') {
            ++pos_;
            Node c;
            c.kind = Node::COMM;
            c.kids.push_back(sequence());
            expect(',');
            c.kids.push_back(sequence());
            expect(']');
            return {std::move(c)};
        }
        if (!is_ident_char(s_[pos_])) fail(std::string("unexpected '") + s_[pos_] + "'");
        const std::size_t start = pos_;
        while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
        const std::string_view ident = s_.substr(start, pos_ - start);
        // Split a run of generator names, longest name first.
        std::vector<Node> out;
        std::size_t at = 0;
        while (at < ident.size()) {
            int best = -1;
            std::size_t best_len = 0;
            for (std::size_t g = 0; g < gens_.size(); ++g)
                if (gens_[g].size() > best_len && ident.substr(at, gens_[g].size()) == gens_[g]) {
                    best = static_cast<int>(g);
                    best_len = gens_[g].size();
                }
            if (best < 0) {
                pos_ = start + at;
                fail("unknown generator in '" + std::string(ident.substr(at)) + "'");
            }
            Node l;
            l.kind = Node::LETTER;
            l.gen = best;
            out.push_back(std::move(l));
            at += best_len;
        }
        return out;
    }

    // [digits] ['*'] [param]; at least one part present.
    Affine term(bool allow_star) {
        skip();
        Affine t{0, 0};
        const std::size_t start = pos_;
        long coeff = 1;
        bool digits = false;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ > start) {
            digits = true;
            if (!parse_long(s_.substr(start, pos_ - start), coeff)) fail("exponent out of range");
        }
        if (allow_star && digits && peek('*')) ++pos_;
        const std::size_t id_start = pos_;
        while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
        const std::string_view ident = s_.substr(id_start, pos_ - id_start);
        if (!ident.empty() && (param_.empty() || ident != param_)) {
            if (!allow_star) {
                // Not the parameter: a generator follows the exponent.
                pos_ = id_start;
                if (!digits) fail("expected an exponent");
                t.b = coeff;
                return t;
            }
            pos_ = id_start;
            fail("unknown parameter '" + std::string(ident) + "'");
        }
        if (!ident.empty()) {
            uses_param_ = true;
            t.a = coeff;
            return t;
        }
        if (!digits) fail("expected an exponent");
        t.b = coeff;
        return t;
    }

    Affine exponent() {
        if (peek('(')) {
            ++pos_;
            Affine sum{0, 0};
            int sign = 1;
            if (peek('-')) {
                ++pos_;
                sign = -1;
            }
            for (;;) {
                const Affine t = term(true);
                sum.a += sign * t.a;
                sum.b += sign * t.b;
                if (peek('+')) sign = 1;
                else if (peek('-')) sign = -1;
                else break;
                ++pos_;
            }
            expect(')');
            return sum;
        }
        int sign = 1;
        if (peek('-')) {
            ++pos_;
            sign = -1;
        }
        Affine t = term(false);
        t.a *= sign;
        t.b *= sign;
        return t;
    }

    std::string_view s_;
    const std::vector<std::string>& gens_;
    const std::string& param_;
    std::size_t pos_ = 0;
    bool uses_param_ = false;
};

std::vector<int> invert_word(std::vector<int> w) {
    std::reverse(w.begin(), w.end());
    for (int& x : w) x = -x;
    return w;
}

std::vector<int> evaluate(const Node& n, long v) {
    switch (n.kind) {
        case Node::LETTER:
            return {n.gen + 1};
        case Node::SEQ: {
            std::vector<int> out;
            for (const auto& k : n.kids) {
                auto w = evaluate(k, v);
                out.insert(out.end(), w.begin(), w.end());
            }
            return out;
        }
        case Node::POWER: {
            long e = n.exponent.at(v);
            auto base = evaluate(n.kids.front(), v);
            if (e < 0) {
                base = invert_word(base);
                e = -e;
            }
            if (static_cast<double>(e) * static_cast<double>(base.size()) > 1e7)
                throw InputError("expanded relator is too long");
            std::vector<int> out;
            for (long i = 0; i < e; ++i) out.insert(out.end(), base.begin(), base.end());
            return out;
        }
        case Node::COMM: {
            auto x = evaluate(n.kids[0], v), y = evaluate(n.kids[1], v);
            std::vector<int> out = x;
            out.insert(out.end(), y.begin(), y.end());
            auto xi = invert_word(x), yi = invert_word(y);
            out.insert(out.end(), xi.begin(), xi.end());
            out.insert(out.end(), yi.begin(), yi.end());
            return out;
        }
    }
    return {};
}

bool starts_with_piece(const Alphabet& a, const Relator& r, const Piece& p) {
    if (static_cast<int>(r.size()) < p.length) return false;
    for (std::size_t i = 0; i < p.exact.size(); ++i)
        if (!(r[i] == p.exact[i])) return false;
    (void)a;
    return p.junction < 0 || r[p.exact.size()].factor == p.junction;
}

Piece make_piece(const Family& f, int i, int j, int m) {
    const auto& r = f.members[idx(i)];
    const auto& s = f.members[idx(j)];
    Piece p;
    p.length = m;
    p.first = i;
    p.second = j;
    int exact = 0;
    while (exact < m && r[idx(exact)] == s[idx(exact)]) ++exact;
    p.exact.assign(r.begin(), r.begin() + exact);
    if (exact < m) p.junction = r[idx(exact)].factor;
    return p;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    long num = 0, den = 1;
    if (!parse_long(text.substr(0, slash), num) ||
        (slash != std::string_view::npos && !parse_long(text.substr(slash + 1), den)) || den == 0)
        throw InputError("malformed rational '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string format_rational(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Element identity(const Factor& f) {
    switch (f.kind) {
        case FactorKind::CYCLIC: return {0};
        case FactorKind::FREE_ABELIAN: return Element(idx(f.param), 0);
        case FactorKind::FREE: return {};
    }
    return {};
}

Element generator_power(const Factor& f, int gen, long power) {
    if (gen < 0 || gen >= static_cast<int>(f.generators.size()))
        throw InputError("generator index out of range in factor " + f.name);
    Element e = identity(f);
    switch (f.kind) {
        case FactorKind::CYCLIC: e[0] = mod(power, f.param); break;
        case FactorKind::FREE_ABELIAN: e[idx(gen)] = power; break;
        case FactorKind::FREE:
            for (long i = 0; i < std::abs(power); ++i) e.push_back(power > 0 ? gen + 1 : -(gen + 1));
            break;
    }
    return e;
}

Element multiply(const Factor& f, const Element& x, const Element& y) {
    switch (f.kind) {
        case FactorKind::CYCLIC: return {mod(x[0] + y[0], f.param)};
        case FactorKind::FREE_ABELIAN: {
            Element out(x);
            for (std::size_t i = 0; i < out.size(); ++i) out[i] += y[i];
            return out;
        }
        case FactorKind::FREE: {
            Element out(x);
            for (long l : y) {
                if (!out.empty() && out.back() == -l) out.pop_back();
                else out.push_back(l);
            }
            return out;
        }
    }
    return {};
}

Element inverse(const Factor& f, const Element& x) {
    switch (f.kind) {
        case FactorKind::CYCLIC: return {mod(-x[0], f.param)};
        case FactorKind::FREE_ABELIAN: {
            Element out(x);
            for (long& v : out) v = -v;
            return out;
        }
        case FactorKind::FREE: {
            Element out(x.rbegin(), x.rend());
            for (long& v : out) v = -v;
            return out;
        }
    }
    return {};
}

bool is_identity(const Factor& f, const Element& x) { return x == identity(f); }

void validate(const Factor& f, const Element& x) {
    switch (f.kind) {
        case FactorKind::CYCLIC:
            if (x.size() != 1 || (f.param > 0 && (x[0] < 0 || x[0] >= f.param)))
                throw InputError("malformed element of cyclic factor " + f.name);
            return;
        case FactorKind::FREE_ABELIAN:
            if (x.size() != idx(f.param)) throw InputError("malformed element of free abelian factor " + f.name);
            return;
        case FactorKind::FREE:
            for (std::size_t i = 0; i < x.size(); ++i) {
                if (x[i] == 0 || std::abs(x[i]) > f.param) throw InputError("malformed element of free factor " + f.name);
                if (i && x[i] == -x[i - 1]) throw InputError("unreduced element of free factor " + f.name);
            }
            return;
    }
}

std::string format_element(const Factor& f, const Element& x) {
    std::ostringstream out;
    auto power = [&](const std::string& g, long e) {
        if (e == 0) return;
        if (out.tellp() > 0) out << ' ';
        out << g;
        if (e != 1) out << '^' << e;
    };
    switch (f.kind) {
        case FactorKind::CYCLIC: power(f.generators[0], x[0]); break;
        case FactorKind::FREE_ABELIAN:
            for (std::size_t i = 0; i < x.size(); ++i) power(f.generators[i], x[i]);
            break;
        case FactorKind::FREE:
            for (std::size_t i = 0; i < x.size();) {
                std::size_t j = i;
                while (j < x.size() && x[j] == x[i]) ++j;
                const long l = x[i];
                power(f.generators[idx(std::abs(l) - 1)], (l > 0 ? 1 : -1) * static_cast<long>(j - i));
                i = j;
            }
            break;
    }
    const std::string s = out.str();
    return s.empty() ? "1" : s;
}

Element parse_element(const Factor& f, std::string_view text) {
    TemplateParser parser(text, f.generators, std::string());
    const auto word = evaluate(parser.parse(), 0);
    Element e = identity(f);
    for (int l : word) e = multiply(f, e, generator_power(f, std::abs(l) - 1, l > 0 ? 1 : -1));
    return e;
}

Alphabet free_group_alphabet(const std::vector<std::string>& generators) {
    Alphabet a;
    a.free_product = false;
    a.generators = generators;
    for (std::size_t g = 0; g < generators.size(); ++g) {
        a.factors.push_back(Factor{generators[g], FactorKind::CYCLIC, 0, {generators[g]}});
        a.factor_of.push_back(static_cast<int>(g));
        a.local.push_back(0);
    }
    return a;
}

Alphabet free_product_alphabet(const std::vector<Factor>& factors) {
    Alphabet a;
    a.free_product = true;
    a.factors = factors;
    for (std::size_t f = 0; f < factors.size(); ++f)
        for (std::size_t i = 0; i < factors[f].generators.size(); ++i) {
            a.generators.push_back(factors[f].generators[i]);
            a.factor_of.push_back(static_cast<int>(f));
            a.local.push_back(static_cast<int>(i));
        }
    return a;
}

std::string format_syllable(const Alphabet& a, const Syllable& s) {
    const auto& f = a.factors[idx(s.factor)];
    const std::string body = format_element(f, s.value);
    if (!a.free_product) return body;
    return body.find(' ') == std::string::npos ? body : "(" + body + ")";
}

std::string format_relator(const Alphabet& a, const Relator& r) {
    std::string out;
    for (std::size_t i = 0; i < r.size(); ++i) out += (i ? " " : "") + format_syllable(a, r[i]);
    return out.empty() ? "1" : out;
}

Syllable inverse(const Alphabet& a, const Syllable& s) {
    return Syllable{s.factor, inverse(a.factors[idx(s.factor)], s.value)};
}

Relator inverse(const Alphabet& a, const Relator& r) {
    Relator out;
    for (auto it = r.rbegin(); it != r.rend(); ++it) out.push_back(inverse(a, *it));
    return out;
}

Presentation parse_presentation(std::string_view text) {
    Presentation p;
    std::vector<std::string> generators;
    std::vector<Factor> factors;
    bool have_generators = false, have_param = false;
    std::vector<std::pair<std::string, std::size_t>> raw;  // template, line
    std::vector<std::size_t> offsets;
    std::size_t line_no = 0, pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = text.find('\n', pos);
        std::string_view line = text.substr(pos, end == std::string_view::npos ? text.size() - pos : end - pos);
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        const auto t = io::tokenize(line);
        if (!t.empty()) {
            const std::string& kw = t[0].text;
            if (kw == "generators") {
                if (have_generators || !factors.empty())
                    throw InputError("generators may be declared once and not mixed with factors", line_no,
                                     t[0].column);
                if (t.size() < 2) throw InputError("expected 'generators <name> ...'", line_no, t[0].column);
                have_generators = true;
                for (std::size_t i = 1; i < t.size(); ++i) generators.push_back(t[i].text);
            } else if (kw == "factor") {
                if (have_generators) throw InputError("factors cannot be mixed with 'generators'", line_no, t[0].column);
                if (t.size() < 5) throw InputError("expected 'factor <name> <kind> <n> <generators>'", line_no, t[0].column);
                Factor f;
                f.name = t[1].text;
                const std::string& kind = t[2].text;
                long n = 0;
                if (!parse_long(t[3].text, n) || n < 0) throw InputError("expected a nonnegative integer", line_no, t[3].column);
                f.param = static_cast<int>(n);
                for (std::size_t i = 4; i < t.size(); ++i) f.generators.push_back(t[i].text);
                if (kind == "cyclic") {
                    f.kind = FactorKind::CYCLIC;
                    if (n == 1) throw InputError("cyclic factor of order 1 is trivial", line_no, t[3].column);
                    if (f.generators.size() != 1)
                        throw InputError("a cyclic factor has exactly one generator", line_no, t[4].column);
                } else if (kind == "free-abelian" || kind == "free") {
                    f.kind = kind == "free" ? FactorKind::FREE : FactorKind::FREE_ABELIAN;
                    if (n < 1 || f.generators.size() != idx(n))
                        throw InputError("rank and generator count differ", line_no, t[3].column);
                } else {
                    throw InputError("unknown factor kind '" + kind + "'", line_no, t[2].column);
                }
                factors.push_back(std::move(f));
            } else if (kw == "param") {
                if (have_param) throw InputError("only one parameter is supported", line_no, t[0].column);
                if (t.size() < 3 || t[2].text != "=") throw InputError("expected 'param <name> = <values>'", line_no, t[0].column);
                have_param = true;
                p.param = t[1].text;
                std::string values;
                for (std::size_t i = 3; i < t.size(); ++i) values += t[i].text;
                std::set<long> seen;
                std::stringstream ss(values);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    if (item.empty()) continue;
                    const auto dots = item.find("..");
                    long lo = 0, hi = 0;
                    const bool ok = dots == std::string::npos
                                        ? parse_long(item, lo) && (hi = lo, true)
                                        : parse_long(item.substr(0, dots), lo) && parse_long(item.substr(dots + 2), hi);
                    if (!ok || hi < lo || hi - lo > 100000)
                        throw InputError("malformed index set '" + item + "'", line_no, t.size() > 3 ? t[3].column : t[2].column);
                    for (long v = lo; v <= hi; ++v)
                        if (seen.insert(v).second) p.index_set.push_back(v);
                }
            } else if (kw == "relator") {
                if (t.size() < 2) throw InputError("expected 'relator <word>'", line_no, t[0].column);
                raw.emplace_back(std::string(line.substr(t[1].column - 1)), line_no);
                offsets.push_back(t[1].column - 1);
            } else {
                throw InputError("unknown keyword '" + kw + "'", line_no, t[0].column);
            }
        }
        if (end == std::string_view::npos) break;
        pos = end + 1;
    }
    if (generators.empty() && factors.empty()) throw InputError("no generators or factors declared");
    p.alphabet = factors.empty() ? free_group_alphabet(generators) : free_product_alphabet(factors);
    std::set<std::string> names;
    for (const auto& g : p.alphabet.generators)
        if (!names.insert(g).second) throw InputError("duplicate generator '" + g + "'");
    if (raw.empty()) throw InputError("no relators declared");
    for (std::size_t i = 0; i < raw.size(); ++i) {
        try {
            TemplateParser(raw[i].first, p.alphabet.generators, p.param).parse();
        } catch (const InputError& e) {
            std::string msg = e.what();
            const auto colon = msg.find(": ");
            if (e.column() > 0 && colon != std::string::npos) msg = msg.substr(colon + 2);
            throw InputError(msg, raw[i].second, e.column() + offsets[i]);
        }
        p.relators.push_back(Template{raw[i].first, raw[i].second});
    }
    return p;
}

std::vector<int> expand(const Alphabet& a, std::string_view templ, const std::string& param, long value) {
    TemplateParser parser(templ, a.generators, param);
    return evaluate(parser.parse(), value);
}

Relator to_relator(const Alphabet& a, const std::vector<int>& word) {
    Relator r;
    for (int l : word) {
        const int g = std::abs(l) - 1;
        const int f = a.factor_of[idx(g)];
        const auto& factor = a.factors[idx(f)];
        Syllable s{f, generator_power(factor, a.local[idx(g)], l > 0 ? 1 : -1)};
        if (!a.free_product) {
            if (!r.empty() && r.back() == inverse(a, s)) r.pop_back();
            else r.push_back(std::move(s));
            continue;
        }
        if (!r.empty() && r.back().factor == f) {
            r.back().value = multiply(factor, r.back().value, s.value);
            if (is_identity(factor, r.back().value)) r.pop_back();
        } else {
            r.push_back(std::move(s));
        }
    }
    if (r.empty()) throw InputError("relator is trivial");
    if (!a.free_product) {
        if (r.size() > 1 && r.front() == inverse(a, r.back()))
            throw InputError("relator " + format_relator(a, r) + " is not cyclically reduced");
        return r;
    }
    while (r.size() >= 2 && r.front().factor == r.back().factor) {
        const auto& factor = a.factors[idx(r.front().factor)];
        const Element merged = multiply(factor, r.back().value, r.front().value);
        if (is_identity(factor, merged))
            throw InputError("relator " + format_relator(a, r) + " is not weakly cyclically reduced");
        r.front().value = merged;
        r.pop_back();
    }
    if (r.size() < 2)
        throw InputError("relator " + format_relator(a, r) + " has free-product length below 2");
    return r;
}

std::vector<ExpandedRelator> expand_family(const Presentation& p) {
    std::vector<ExpandedRelator> out;
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        TemplateParser parser(p.relators[i].text, p.alphabet.generators, p.param);
        const Node tree = parser.parse();
        std::vector<long> values{0};
        if (parser.uses_param()) {
            if (p.index_set.empty())
                throw InputError("relator uses parameter '" + p.param + "' but the index set is empty",
                                 p.relators[i].line);
            values = p.index_set;
        }
        for (long v : values) {
            try {
                out.push_back(ExpandedRelator{to_relator(p.alphabet, evaluate(tree, v)), i, v});
            } catch (const InputError& e) {
                throw InputError(std::string(e.what()) + (parser.uses_param() ? " at " + p.param + " = " + std::to_string(v) : ""),
                                 p.relators[i].line);
            }
        }
    }
    return out;
}

Family symmetrize(const Alphabet& a, const std::vector<Relator>& relators) {
    Family f;
    f.alphabet = a;
    f.input = relators;
    std::set<Relator> all;
    for (const auto& r : relators)
        for (const Relator& base : {r, inverse(a, r)})
            for (std::size_t k = 0; k < base.size(); ++k) {
                Relator rot(base.begin() + static_cast<std::ptrdiff_t>(k), base.end());
                rot.insert(rot.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(k));
                all.insert(std::move(rot));
            }
    f.members.assign(all.begin(), all.end());
    return f;
}

bool is_symmetrized(const Family& f) {
    const std::set<Relator> all(f.members.begin(), f.members.end());
    for (const auto& r : f.members) {
        if (!all.count(inverse(f.alphabet, r))) return false;
        Relator rot(r.begin() + 1, r.end());
        rot.push_back(r.front());
        if (!all.count(rot)) return false;
    }
    return true;
}

int common_piece_length(const Alphabet& a, const Relator& r, const Relator& s) {
    const std::size_t n = std::min(r.size(), s.size());
    std::size_t m = 0;
    while (m < n && r[m] == s[m]) ++m;
    if (a.free_product && m < n && r[m].factor == s[m].factor) ++m;
    return static_cast<int>(m);
}

std::vector<Piece> pieces(const Family& f) {
    std::map<std::pair<Relator, int>, Piece> found;
    const int n = static_cast<int>(f.members.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const int m = common_piece_length(f.alphabet, f.members[idx(i)], f.members[idx(j)]);
            if (m == 0) continue;
            Piece p = make_piece(f, i, j, m);
            found.emplace(std::make_pair(p.exact, p.junction), std::move(p));
        }
    std::vector<Piece> out;
    for (auto& [key, p] : found) {
        for (int k = 0; k < n; ++k) {
            const auto& r = f.members[idx(k)];
            if (!starts_with_piece(f.alphabet, r, p)) continue;
            if (p.ratio_member < 0 || r.size() < f.members[idx(p.ratio_member)].size()) {
                p.ratio_member = k;
                p.ratio = Rational(p.length, static_cast<long long>(r.size()));
            }
        }
        out.push_back(std::move(p));
    }
    std::stable_sort(out.begin(), out.end(), [](const Piece& x, const Piece& y) { return x.ratio > y.ratio; });
    return out;
}

bool verify_piece(const Family& f, const Piece& p) {
    if (p.first == p.second || p.first < 0 || p.second < 0) return false;
    const auto& r = f.members[idx(p.first)];
    const auto& s = f.members[idx(p.second)];
    if (r == s || !starts_with_piece(f.alphabet, r, p) || !starts_with_piece(f.alphabet, s, p)) return false;
    if (p.length != static_cast<int>(p.exact.size()) + (p.junction >= 0 ? 1 : 0)) return false;
    // The junction letter must be free to consolidate: both members carry a
    // letter of that factor there and they differ.
    if (p.junction >= 0 && r[p.exact.size()] == s[p.exact.size()]) return false;
    return p.junction < 0 || f.alphabet.free_product;
}

std::string format_piece(const Alphabet& a, const Piece& p) {
    std::string out = p.exact.empty() ? "" : format_relator(a, p.exact);
    if (p.junction >= 0) out += std::string(out.empty() ? "" : " ") + "<" + a.factors[idx(p.junction)].name + ">";
    return out;
}

CprimeVerdict check_cprime(const Family& f, const Rational& lambda) {
    CprimeVerdict out;
    const int n = static_cast<int>(f.members.size());
    int best_i = -1, best_j = -1, best_len = 0, best_r = -1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const int m = common_piece_length(f.alphabet, f.members[idx(i)], f.members[idx(j)]);
            if (m == 0) continue;
            for (int r : {i, j}) {
                const auto len = static_cast<long long>(f.members[idx(r)].size());
                const Rational ratio(m, len);
                const bool better = best_r < 0 || ratio > out.max_ratio ||
                                    (ratio == out.max_ratio && len < static_cast<long long>(f.members[idx(best_r)].size()));
                if (better) {
                    out.max_ratio = ratio;
                    best_i = i;
                    best_j = j;
                    best_len = m;
                    best_r = r;
                }
            }
        }
    out.pass = best_r < 0 || out.max_ratio < lambda;
    if (best_r >= 0) {
        Piece p = make_piece(f, best_i, best_j, best_len);
        p.ratio = out.max_ratio;
        p.ratio_member = best_r;
        out.witness = std::move(p);
    }
    return out;
}

namespace {

// First closed walk of length h in [3, q) in the digraph, as its vertex list.
std::vector<int> closed_walk(const std::vector<Bitset>& adj, int q) {
    const std::size_t n = adj.size();
    std::vector<std::vector<Bitset>> power{adj};  // power[k][i]: ends of walks of length k + 1
    for (int h = 2; h < q; ++h) {
        const auto& prev = power.back();
        std::vector<Bitset> next(n, Bitset(n));
        for (std::size_t i = 0; i < n; ++i)
            for (auto j = prev[i].find_first(); j != Bitset::npos; j = prev[i].find_next(j)) next[i] |= adj[j];
        power.push_back(std::move(next));
        if (h < 3) continue;
        for (std::size_t i = 0; i < n; ++i) {
            if (!power.back()[i][i]) continue;
            std::vector<int> cycle;
            std::size_t at = i;
            for (int step = 0; step < h; ++step) {
                cycle.push_back(static_cast<int>(at));
                const int left = h - step - 1;  // edges still needed after this one
                for (auto w = adj[at].find_first(); w != Bitset::npos; w = adj[at].find_next(w))
                    if (left == 0 ? w == i : power[idx(left - 1)][w][i]) {
                        at = w;
                        break;
                    }
            }
            return cycle;
        }
    }
    return {};
}

}  // namespace

TVerdict check_t(const Family& f, int q) {
    if (f.alphabet.free_product && q != 4) throw InputError("free products support only T(4)");
    if (q < 3 || q > 64) throw InputError("T(q) needs 3 <= q <= 64");
    TVerdict out;
    const auto& a = f.alphabet;
    // Free groups: walks through the symmetrized family avoiding inverse
    // pairs. Free products: triples of input relators.
    const auto& nodes = a.free_product ? f.input : f.members;
    const std::size_t n = nodes.size();
    std::vector<int> inv(n, -1);
    if (!a.free_product)
        for (std::size_t i = 0; i < n; ++i) {
            const Relator ri = inverse(a, nodes[i]);
            const auto it = std::lower_bound(nodes.begin(), nodes.end(), ri);
            if (it != nodes.end() && *it == ri) inv[i] = static_cast<int>(it - nodes.begin());
        }
    // i -> j when the product r_i r_j cancels.
    std::vector<Bitset> adj(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (static_cast<int>(j) != inv[i] && nodes[i].back() == inverse(a, nodes[j].front())) adj[i].set(j);
    out.cycle = closed_walk(adj, q);
    out.pass = out.cycle.empty();
    if (!out.pass || !a.free_product) return out;
    std::set<Syllable> letters;
    for (const auto& r : f.input) letters.insert(r.begin(), r.end());
    const std::vector<Syllable> ls(letters.begin(), letters.end());
    for (const auto& y1 : ls)
        for (const auto& y2 : ls)
            for (const auto& y3 : ls) {
                if (y1.factor != y2.factor || y2.factor != y3.factor) continue;
                const auto& factor = a.factors[idx(y1.factor)];
                if (is_identity(factor, multiply(factor, multiply(factor, y1.value, y2.value), y3.value))) {
                    out.pass = false;
                    out.letters = std::array<Syllable, 3>{y1, y2, y3};
                    return out;
                }
            }
    return out;
}

Verdict check_small_cancellation(const Family& f, const Rational& lambda, int q) {
    if (lambda <= Rational(0) || lambda >= Rational(1)) throw InputError("lambda must lie strictly between 0 and 1");
    Verdict v;
    v.cprime = check_cprime(f, lambda);
    v.t = check_t(f, q);
    if (f.alphabet.free_product) {
        v.notes.push_back("cyclic conjugates are taken at letter boundaries only");
        v.notes.push_back("relators of free-product length below 2 are refused");
        v.notes.push_back("the T(4) relator and letter triples are drawn from the input relators");
    }
    return v;
}

}  // namespace cubical::sc
