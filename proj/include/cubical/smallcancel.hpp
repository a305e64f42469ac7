#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

// Small-cancellation conditions for relator families in free groups and in
// free products of cyclic, free abelian and free factors.
namespace cubical::sc {

using Rational = boost::rational<long long>;

// Parses "p/q" or an integer; InputError otherwise.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& r);

enum class FactorKind { CYCLIC, FREE_ABELIAN, FREE };

// CYCLIC(p): integers mod p, p = 0 meaning the integers; one generator.
// FREE_ABELIAN(r): integer vectors of length r; FREE(r): reduced words.
struct Factor {
    std::string name;
    FactorKind kind = FactorKind::CYCLIC;
    int param = 0;  // order p or rank r
    std::vector<std::string> generators;
};

// Canonical encoding, so equal elements compare equal: CYCLIC one residue,
// FREE_ABELIAN the coordinate vector, FREE the reduced word with letters
// +-(i+1) over the factor's generators.
using Element = std::vector<long>;

Element identity(const Factor& f);
Element generator_power(const Factor& f, int gen, long power);
Element multiply(const Factor& f, const Element& x, const Element& y);
Element inverse(const Factor& f, const Element& x);
bool is_identity(const Factor& f, const Element& x);
// InputError on wrong size or out-of-range entries.
void validate(const Factor& f, const Element& x);
std::string format_element(const Factor& f, const Element& x);
// Product of generator powers of this factor, e.g. "a^3 b^-1".
Element parse_element(const Factor& f, std::string_view text);

// One letter of an alternating product; in a free group every letter is a
// generator or its inverse and the factor index is the generator index.
struct Syllable {
    int factor = 0;
    Element value;
    bool operator==(const Syllable& o) const { return factor == o.factor && value == o.value; }
    bool operator<(const Syllable& o) const {
        return factor != o.factor ? factor < o.factor : value < o.value;
    }
};
using Relator = std::vector<Syllable>;

// Letters are single generators (free group) or factor elements (free product).
struct Alphabet {
    bool free_product = false;
    std::vector<Factor> factors;  // free group: one infinite cyclic factor per generator
    std::vector<std::string> generators;
    std::vector<int> factor_of;  // generator -> factor
    std::vector<int> local;      // generator -> index inside its factor
};

Alphabet free_group_alphabet(const std::vector<std::string>& generators);
Alphabet free_product_alphabet(const std::vector<Factor>& factors);

std::string format_syllable(const Alphabet& a, const Syllable& s);
std::string format_relator(const Alphabet& a, const Relator& r);
Syllable inverse(const Alphabet& a, const Syllable& s);
Relator inverse(const Alphabet& a, const Relator& r);

// Parametric relator: generators, parentheses, brackets [x,y] = x y x^-1 y^-1
// and exponents affine in one parameter, e.g. "(a^n b^n)^5", "[(ab)^n,(cd)^n]^k".
struct Template {
    std::string text;
    std::size_t line = 0;
};

struct Presentation {
    Alphabet alphabet;
    std::string param;           // empty when the templates use no parameter
    std::vector<long> index_set;
    std::vector<Template> relators;
};

// `generators a b` or `factor NAME cyclic|free-abelian|free N gens...`,
// `param n = 1..3` (or a comma list), `relator <template>`.
Presentation parse_presentation(std::string_view text);

// Word over generators with letters +-(g+1), not yet reduced.
std::vector<int> expand(const Alphabet& a, std::string_view templ, const std::string& param, long value);

// Reduced and cyclically reduced relator for the alphabet. Free products
// merge adjacent letters of one factor and conjugate so the first and last
// letters lie in different factors. InputError when the word is trivial,
// not (weakly) cyclically reduced, or of free-product length < 2.
Relator to_relator(const Alphabet& a, const std::vector<int>& word);

struct ExpandedRelator {
    Relator relator;
    std::size_t template_index = 0;
    long index = 0;  // parameter value
};

// Every template at every parameter value. InputError on an empty index set
// when a template uses the parameter, or on a trivial relator.
std::vector<ExpandedRelator> expand_family(const Presentation& p);

struct Family {
    Alphabet alphabet;
    std::vector<Relator> input;
    std::vector<Relator> members;  // closure under inverses and rotations, sorted
};

Family symmetrize(const Alphabet& a, const std::vector<Relator>& relators);
bool is_symmetrized(const Family& f);

// Length of the longest prefix shared by r and s as pieces: the exact common
// prefix, plus one junction letter in a free product when the next letters
// lie in the same factor.
int common_piece_length(const Alphabet& a, const Relator& r, const Relator& s);

struct Piece {
    Relator exact;          // letters matched exactly
    int junction = -1;      // factor of a consolidated final letter, or -1
    int length = 0;
    int first = -1, second = -1;  // distinct members starting with the piece
    Rational ratio;         // |p| / |r| for the shortest member r starting with it
    int ratio_member = -1;
};

// Maximal common prefixes over ordered pairs of distinct members, deduplicated.
std::vector<Piece> pieces(const Family& f);
// Re-checks that both witnesses start with the piece and differ.
bool verify_piece(const Family& f, const Piece& p);
std::string format_piece(const Alphabet& a, const Piece& p);

struct CprimeVerdict {
    bool pass = true;
    Rational max_ratio{0};
    std::optional<Piece> witness;  // largest ratio, ties to the shortest relator
};

CprimeVerdict check_cprime(const Family& f, const Rational& lambda);

struct TVerdict {
    bool pass = true;
    // r_0 .. r_{h-1} with no product r_i r_{i+1} (indices mod h) reduced:
    // members for free groups, input relators for free products.
    std::vector<int> cycle;
    std::optional<std::array<Syllable, 3>> letters;  // free products: y1 y2 y3 = 1
};

// Free groups: any q >= 3. Free products: q = 4 only (InputError otherwise).
TVerdict check_t(const Family& f, int q);

struct Verdict {
    CprimeVerdict cprime;
    TVerdict t;
    std::vector<std::string> notes;
};

Verdict check_small_cancellation(const Family& f, const Rational& lambda, int q);

}  // namespace cubical::sc
