#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace clzeta {

enum class Generator { A, B };

struct Letter {
    Generator gen;
    int exp = 1;

    friend bool operator==(const Letter&, const Letter&) = default;
};

/// Noncommutative monomial in A and B; the empty word is the identity.
struct RelationWord {
    std::vector<Letter> letters;

    int degree(Generator g) const;
    friend bool operator==(const RelationWord&, const RelationWord&) = default;
};

struct RelationTerm {
    long coeff = 1;
    RelationWord word;
};

/// Integer-linear combination of words, read as "= 0".
struct Relation {
    std::vector<RelationTerm> terms;
    int b_degree = 0; // max B-degree over the terms

    bool b_linear() const noexcept { return b_degree <= 1; }
    bool a_only() const noexcept { return b_degree == 0; }
};

struct RelationSystem {
    std::vector<Relation> relations;

    bool b_linear() const noexcept;
    int max_exponent(Generator g) const;
};

/// Grammar (whitespace ignored, relations separated by commas):
///   relation ::= ['+'|'-'] term (('+'|'-') term)*
///   term     ::= int ['*' word] | word
///   word     ::= factor ('*' factor)*
///   factor   ::= ('A'|'B') ['^' int]
/// Throws SyntaxError (with the byte offset) or UnknownGeneratorError.
RelationSystem parse_relations(std::string_view text);

/// Canonical text form, e.g. "A*B - B*A, A^2*B".
std::string to_string(const RelationSystem& system);

} // namespace clzeta
