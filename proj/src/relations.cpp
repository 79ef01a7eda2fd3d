#include "clzeta/relations.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "clzeta/errors.hpp"

namespace clzeta {

int RelationWord::degree(Generator g) const
{
    int d = 0;
    for (const auto& l : letters)
        if (l.gen == g)
            d += l.exp;
    return d;
}

bool RelationSystem::b_linear() const noexcept
{
    return std::all_of(relations.begin(), relations.end(), [](const Relation& r) { return r.b_linear(); });
}

int RelationSystem::max_exponent(Generator g) const
{
    int m = 0;
    for (const auto& r : relations)
        for (const auto& t : r.terms)
            for (const auto& l : t.word.letters)
                if (l.gen == g)
                    m = std::max(m, l.exp);
    return m;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    RelationSystem parse()
    {
        RelationSystem system;
        skip_ws();
        if (at_end())
            return system;
        system.relations.push_back(relation());
        while (peek() == ',') {
            ++pos_;
            system.relations.push_back(relation());
        }
        if (!at_end())
            fail("expected ',' or an operator");
        return system;
    }

private:
    Relation relation()
    {
        Relation rel;
        skip_ws();
        long sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
        }
        rel.terms.push_back(term(sign));
        while (peek() == '+' || peek() == '-') {
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
            rel.terms.push_back(term(sign));
        }
        for (const auto& t : rel.terms)
            rel.b_degree = std::max(rel.b_degree, t.word.degree(Generator::B));
        return rel;
    }

    RelationTerm term(long sign)
    {
        RelationTerm t;
        skip_ws();
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            t.coeff = sign * integer();
            if (peek() == '*') {
                ++pos_;
                t.word = word();
            }
        } else {
            t.coeff = sign;
            t.word = word();
        }
        return t;
    }

    RelationWord word()
    {
        RelationWord w;
        w.letters.push_back(factor());
        while (peek() == '*') {
            ++pos_;
            w.letters.push_back(factor());
        }
        return w;
    }

    Letter factor()
    {
        skip_ws();
        const char c = at_end() ? '\0' : text_[pos_];
        Letter l{Generator::A, 1};
        if (c == 'A') {
            l.gen = Generator::A;
        } else if (c == 'B') {
            l.gen = Generator::B;
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            throw UnknownGeneratorError(std::string("unknown generator '") + c + "'", pos_);
        } else {
            fail("expected a generator");
        }
        ++pos_;
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            const std::size_t at = pos_;
            const long e = integer();
            if (e < 1)
                throw SyntaxError("exponent must be positive", at);
            l.exp = static_cast<int>(e);
        }
        return l;
    }

    long integer()
    {
        skip_ws();
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected an integer");
        if (pos_ - start > 9)
            throw SyntaxError("integer too large", start);
        return std::strtol(std::string(text_.substr(start, pos_ - start)).c_str(), nullptr, 10);
    }

    // Next non-space character, or '\0' at the end.
    char peek()
    {
        skip_ws();
        return at_end() ? '\0' : text_[pos_];
    }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_end() const { return pos_ >= text_.size(); }

    [[noreturn]] void fail(const std::string& what) { throw SyntaxError(what, pos_); }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string word_string(const RelationWord& w)
{
    std::string out;
    for (const auto& l : w.letters) {
        if (!out.empty())
            out += "*";
        out += l.gen == Generator::A ? "A" : "B";
        if (l.exp != 1)
            out += "^" + std::to_string(l.exp);
    }
    return out;
}

} // namespace

RelationSystem parse_relations(std::string_view text)
{
    return Parser(text).parse();
}

std::string to_string(const RelationSystem& system)
{
    std::string out;
    for (std::size_t r = 0; r < system.relations.size(); ++r) {
        if (r > 0)
            out += ", ";
        const auto& rel = system.relations[r];
        for (std::size_t i = 0; i < rel.terms.size(); ++i) {
            const auto& t = rel.terms[i];
            const long mag = std::labs(t.coeff);
            if (i == 0)
                out += t.coeff < 0 ? "-" : "";
            else
                out += t.coeff < 0 ? " - " : " + ";
            const std::string w = word_string(t.word);
            if (w.empty())
                out += std::to_string(mag);
            else if (mag == 1)
                out += w;
            else
                out += std::to_string(mag) + "*" + w;
        }
    }
    return out;
}

} // namespace clzeta
