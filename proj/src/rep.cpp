#include "rtorsion/rep.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "rtorsion/errors.hpp"

namespace rtorsion {

Word Word::inverse() const {
    std::vector<Letter> r(letters_.rbegin(), letters_.rend());
    for (auto& l : r) l.exp = -l.exp;
    return Word(std::move(r));
}

Word Word::reversed() const { return Word(std::vector<Letter>(letters_.rbegin(), letters_.rend())); }

Word Word::power(int n) const {
    Word base = n < 0 ? inverse() : *this;
    std::vector<Letter> r;
    for (int i = 0; i < std::abs(n); ++i) r.insert(r.end(), base.letters_.begin(), base.letters_.end());
    return Word(std::move(r));
}

Word Word::freely_reduced() const {
    std::vector<Letter> r;
    for (const auto& l : letters_) {
        if (!r.empty() && r.back().gen == l.gen && r.back().exp == -l.exp)
            r.pop_back();
        else
            r.push_back(l);
    }
    return Word(std::move(r));
}

Word Word::prefix(std::size_t n) const {
    return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + std::min(n, letters_.size())));
}

Word operator*(const Word& a, const Word& b) {
    std::vector<Letter> r = a.letters_;
    r.insert(r.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::move(r));
}

std::string Word::to_string(const std::vector<std::string>& gens) const {
    if (letters_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += ' ';
        out += gens.at(letters_[i].gen);
        if (letters_[i].exp < 0) out += "^-1";
    }
    return out;
}

Word commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

namespace {

class WordParser {
public:
    WordParser(std::string_view s, const std::vector<std::string>& gens) : s_(s), gens_(gens) {}

    Word parse() {
        Word w = product();
        skip();
        if (pos_ < s_.size()) fail(std::string("unexpected character '") + s_[pos_] + "'");
        return w;
    }

private:
    void skip() {
        while (pos_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '*'))
            ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("word parse error at offset " + std::to_string(pos_) + ": " + what);
    }
    bool at_atom() {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return c == '[' || c == '(' || std::isalnum(static_cast<unsigned char>(c));
    }
    Word product() {
        Word w;
        while (at_atom()) w = w * powered();
        return w;
    }
    int exponent() {
        skip();
        bool paren = false;
        if (pos_ < s_.size() && s_[pos_] == '(') {
            paren = true;
            ++pos_;
        }
        int sign = 1;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            sign = s_[pos_] == '-' ? -1 : 1;
            ++pos_;
        }
        int value = 0;
        auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), value);
        if (ec != std::errc() || ptr == s_.data() + pos_) fail("malformed exponent");
        pos_ = static_cast<std::size_t>(ptr - s_.data());
        if (paren) {
            if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')' in exponent");
            ++pos_;
        }
        return sign * value;
    }
    Word powered() {
        Word a = atom();
        skip();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            a = a.power(exponent());
        }
        return a;
    }
    Word atom() {
        skip();
        char c = s_[pos_];
        if (c == '[') {
            ++pos_;
            Word a = product();
            skip();
            if (pos_ >= s_.size() || s_[pos_] != ',') fail("expected ',' in commutator");
            ++pos_;
            Word b = product();
            skip();
            if (pos_ >= s_.size() || s_[pos_] != ']') fail("unbalanced '['");
            ++pos_;
            return commutator(a, b);
        }
        if (c == '(') {
            ++pos_;
            Word a = product();
            skip();
            if (pos_ >= s_.size() || s_[pos_] != ')') fail("unbalanced '('");
            ++pos_;
            return a;
        }
        // Longest generator name matching here.
        int best = -1;
        std::size_t best_len = 0;
        for (std::size_t g = 0; g < gens_.size(); ++g) {
            const auto& name = gens_[g];
            if (name.size() > best_len && s_.substr(pos_, name.size()) == name) {
                best = static_cast<int>(g);
                best_len = name.size();
            }
        }
        if (best < 0) {
            std::size_t e = pos_;
            while (e < s_.size() && std::isalnum(static_cast<unsigned char>(s_[e]))) ++e;
            fail("unknown generator '" + std::string(s_.substr(pos_, e - pos_)) + "'");
        }
        pos_ += best_len;
        return Word({Letter{best, 1}});
    }

    std::string_view s_;
    const std::vector<std::string>& gens_;
    std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, const std::vector<std::string>& gens) {
    return WordParser(text, gens).parse();
}

int twist_degree(int m) {
    if (m == 0) throw PreconditionError("twist knot index m must be nonzero");
    return m > 0 ? 2 * m - 1 : -2 * m;
}

TwistKnotFamily TwistKnotFamily::make(int m) {
    TwistKnotFamily f;
    f.m = m;
    f.d = twist_degree(m);
    const Word x({Letter{0, 1}}), y({Letter{1, 1}});
    f.w = commutator(y, x.inverse()).power(m);
    f.lambda = commutator(x, y.inverse()).power(m) * f.w;
    return f;
}

Word TwistKnotFamily::relator() const {
    const Word x({Letter{0, 1}}), y({Letter{1, 1}});
    return w * x * w.inverse() * y.inverse();
}

Presentation TwistKnotFamily::presentation() const { return {{"x", "y"}, {relator().freely_reduced()}}; }

std::string TwistKnotFamily::name() const { return "J(2," + std::to_string(2 * m) + ")"; }

int parse_twist_knot(std::string_view token) {
    if (token == "3_1") return 1;
    if (token == "4_1") return -1;
    if (token == "5_2") return 2;
    std::string t;
    for (char c : token)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.size() < 6 || t.rfind("J(2,", 0) != 0 || t.back() != ')')
        throw ParseError("expected a knot of the form J(2,2m), got '" + std::string(token) + "'");
    std::string num = t.substr(4, t.size() - 5);
    int n = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), n);
    if (ec != std::errc() || ptr != num.data() + num.size())
        throw ParseError("malformed twist index in '" + std::string(token) + "'");
    if (n == 0 || n % 2 != 0)
        throw ParseError("twist index must be a nonzero even integer in '" + std::string(token) + "'");
    return n / 2;
}

Rep2x2 riley_rep() {
    MultiPoly s = MultiPoly::variable("s");
    MultiPoly si = MultiPoly::monomial({"s"}, {-1});
    MultiPoly t = MultiPoly::variable("t");
    Rep2x2 r;
    r.generators = {"x", "y"};
    r.images.push_back(PolyMatrix{{s, MultiPoly(1)}, {MultiPoly(0), si}});
    r.images.push_back(PolyMatrix{{s, MultiPoly(0)}, {-t, si}});
    return r;
}

PolyMatrix word_eval(const Word& w, const Rep2x2& rep) {
    std::vector<PolyMatrix> inv;
    for (const auto& m : rep.images) inv.push_back(m.adjugate2());
    PolyMatrix acc = PolyMatrix::identity(2);
    for (const auto& l : w.letters()) {
        if (l.gen < 0 || l.gen >= static_cast<int>(rep.images.size()))
            throw PreconditionError("word_eval: generator without an image");
        acc = acc * (l.exp > 0 ? rep.images[l.gen] : inv[l.gen]);
    }
    return acc;
}

std::vector<FoxTerm> fox_derivative(const Word& w, int gen) {
    std::vector<FoxTerm> out;
    const auto& ls = w.letters();
    for (std::size_t i = 0; i < ls.size(); ++i) {
        if (ls[i].gen != gen) continue;
        if (ls[i].exp > 0)
            out.push_back({Integer(1), w.prefix(i)});
        else
            out.push_back({Integer(-1), w.prefix(i + 1)});
    }
    return out;
}

PolyMatrix fox_eval(const std::vector<FoxTerm>& terms, const Rep2x2& rep) {
    PolyMatrix acc(2, 2);
    for (const auto& t : terms) acc = acc + MultiPoly(t.coeff) * word_eval(t.word, rep);
    return acc;
}

MultiPoly riley_polynomial(const TwistKnotFamily& family) {
    PolyMatrix rw = word_eval(family.w, riley_rep());
    MultiPoly s = MultiPoly::variable("s");
    MultiPoly si = MultiPoly::monomial({"s"}, {-1});
    return rw(0, 0) + (si - s) * rw(0, 1);
}

MultiPoly longitude_eigenvalue(const TwistKnotFamily& family) {
    return word_eval(family.lambda, riley_rep())(0, 0);
}

TorsionFraction complement_torsion(const TwistKnotFamily& family) {
    Rep2x2 rep = riley_rep();
    PolyMatrix dy = fox_eval(fox_derivative(family.relator(), 1), rep);
    MultiPoly num = dy(0, 0) * dy(1, 1) - dy(0, 1) * dy(1, 0);
    PolyMatrix xm = rep.images[0] - PolyMatrix::identity(2);
    MultiPoly den = xm(0, 0) * xm(1, 1) - xm(0, 1) * xm(1, 0);
    return {num, den};
}

}  // namespace rtorsion
