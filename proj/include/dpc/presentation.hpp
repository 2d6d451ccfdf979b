#ifndef DPC_PRESENTATION_HPP_
#define DPC_PRESENTATION_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dihedral.hpp"
#include "partial_perm.hpp"

namespace dpc {

  using Letter = std::uint32_t;
  using Word   = std::vector<Letter>;

  // Relation u = v, tagged with the family it belongs to ("R1", "Q3", ...).
  struct Relation {
    Word        lhs;
    Word        rhs;
    std::string family;
  };

  // Concatenation helpers for building words.
  inline Word operator+(Word a, Word const& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }

  inline Word power(Word const& w, std::size_t k) {
    Word out;
    out.reserve(w.size() * k);
    for (std::size_t i = 0; i < k; ++i) {
      out.insert(out.end(), w.begin(), w.end());
    }
    return out;
  }

  class Presentation {
   public:
    Presentation(std::size_t n, std::vector<std::string> alphabet)
        : _n(n), _alphabet(std::move(alphabet)) {}

    std::size_t n() const noexcept {
      return _n;
    }
    std::vector<std::string> const& alphabet() const noexcept {
      return _alphabet;
    }
    std::vector<Relation> const& relations() const noexcept {
      return _relations;
    }

    Letter letter(std::string const& name) const {
      for (std::size_t i = 0; i < _alphabet.size(); ++i) {
        if (_alphabet[i] == name) {
          return static_cast<Letter>(i);
        }
      }
      throw usage_error("no letter named " + name);
    }

    void add(Word lhs, Word rhs, std::string family) {
      validate(lhs);
      validate(rhs);
      _relations.push_back({std::move(lhs), std::move(rhs), std::move(family)});
    }

    // Copy without the relations of the given family.
    Presentation without_family(std::string const& family) const {
      Presentation p(_n, _alphabet);
      for (auto const& r : _relations) {
        if (r.family != family) {
          p._relations.push_back(r);
        }
      }
      return p;
    }

    void validate(Word const& w) const {
      for (Letter a : w) {
        if (a >= _alphabet.size()) {
          throw usage_error("letter " + std::to_string(a)
                            + " outside the alphabet");
        }
      }
    }

    std::string render(Word const& w) const {
      if (w.empty()) {
        return "1";
      }
      std::string s;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) {
          s += ' ';
        }
        s += _alphabet[w[i]];
      }
      return s;
    }

   private:
    std::size_t              _n;
    std::vector<std::string> _alphabet;
    std::vector<Relation>    _relations;
  };

  // Letters of the n+2 generator alphabet A = {g, h, e_1, ..., e_n}.
  namespace letters_a {
    inline constexpr Letter g = 0;
    inline constexpr Letter h = 1;
    inline constexpr Letter e(std::size_t i) {
      return static_cast<Letter>(i + 1);
    }
  }  // namespace letters_a

  // Letters of the 3 generator alphabet B = {g, h, e}.
  namespace letters_b {
    inline constexpr Letter g = 0;
    inline constexpr Letter h = 1;
    inline constexpr Letter e = 2;
  }  // namespace letters_b

  namespace detail {
    inline void require_presentation_degree(std::size_t n) {
      if (n < 3) {
        throw usage_error("presentations need n >= 3, got " + std::to_string(n));
      }
      if (n > kMaxDegree) {
        throw usage_error("presentation degree too large");
      }
    }

    // e_i e_{i+1} ... ordered product over A of the idempotents whose index
    // is not in `skip`.
    inline Word idempotent_product(std::size_t n, std::vector<std::size_t> const& skip) {
      Word w;
      for (std::size_t i = 1; i <= n; ++i) {
        bool skipped = false;
        for (std::size_t s : skip) {
          skipped |= (s == i);
        }
        if (!skipped) {
          w.push_back(letters_a::e(i));
        }
      }
      return w;
    }
  }  // namespace detail

  // <A | R>, n+2 generators.
  inline Presentation build_R(std::size_t n) {
    using namespace letters_a;
    detail::require_presentation_degree(n);
    std::vector<std::string> alphabet{"g", "h"};
    for (std::size_t i = 1; i <= n; ++i) {
      alphabet.push_back("e" + std::to_string(i));
    }
    Presentation p(n, std::move(alphabet));

    p.add(power({g}, n), {}, "R1");
    p.add({h, h}, {}, "R1");
    p.add({h, g}, power({g}, n - 1) + Word{h}, "R1");

    for (std::size_t i = 1; i <= n; ++i) {
      p.add({e(i), e(i)}, {e(i)}, "R2");
    }
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) {
        p.add({e(i), e(j)}, {e(j), e(i)}, "R3");
      }
    }
    p.add({g, e(1)}, {e(n), g}, "R4");
    for (std::size_t i = 1; i + 1 <= n; ++i) {
      p.add({g, e(i + 1)}, {e(i), g}, "R4");
    }
    for (std::size_t i = 1; i <= n; ++i) {
      p.add({h, e(i)}, {e(n - i + 1), h}, "R5");
    }
    if (n % 2 == 1) {
      Word const tail = detail::idempotent_product(n, {1});
      p.add(Word{h, g} + tail, tail, "R6");
    } else {
      Word const tail = detail::idempotent_product(n, {1, n / 2 + 1});
      p.add(Word{h, g} + tail, tail, "R6");
      Word const all = detail::idempotent_product(n, {});
      p.add(Word{h} + all, all, "R6");
    }
    return p;
  }

  // <B | Q>, 3 generators. Q3 is indexed by pairs i < j exactly as written,
  // although each relation depends only on j - i.
  inline Presentation build_Q(std::size_t n) {
    using namespace letters_b;
    detail::require_presentation_degree(n);
    Presentation p(n, {"g", "h", "e"});

    p.add(power({g}, n), {}, "Q1");
    p.add({h, h}, {}, "Q1");
    p.add({h, g}, power({g}, n - 1) + Word{h}, "Q1");

    p.add({e, e}, {e}, "Q2");
    p.add({g, h, e, g, h}, {e}, "Q2");

    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) {
        Word const conj = power({g}, j - i) + Word{e} + power({g}, n - j + i);
        p.add(Word{e} + conj, conj + Word{e}, "Q3");
      }
    }
    Word const eg{e, g};
    if (n % 2 == 1) {
      Word const w = power(eg, n - 2) + Word{e};
      p.add(Word{h, g} + w, w, "Q4");
    } else {
      Word const w = power(eg, n / 2 - 1) + Word{g} + power(eg, n / 2 - 2) + Word{e};
      p.add(Word{h, g} + w, w, "Q5");
      Word const v = power(eg, n - 1) + Word{e};
      p.add(Word{h} + v, v, "Q5");
    }
    return p;
  }

  // (n^2 + 5n + 9 + (-1)^n) / 2
  inline std::size_t expected_R_count(std::size_t n) {
    return (n * n + 5 * n + 9 + (n % 2 == 0 ? 1 : 0) - (n % 2 == 1 ? 1 : 0)) / 2;
  }

  // (n^2 - n + 13 + (-1)^n) / 2
  inline std::size_t expected_Q_count(std::size_t n) {
    return (n * n - n + 13 + (n % 2 == 0 ? 1 : 0) - (n % 2 == 1 ? 1 : 0)) / 2;
  }

  // Image of each letter; index = letter.
  using Assignment = std::vector<PartialPerm>;

  // g, h, e_1..e_n for the alphabet of build_R.
  inline Assignment canonical_assignment_R(std::size_t n) {
    Assignment a{DihedralElement::rotation(n).to_partial_perm(),
                 DihedralElement::reflection(n).to_partial_perm()};
    for (std::size_t i = 1; i <= n; ++i) {
      a.push_back(idempotent(n, static_cast<Point>(i)));
    }
    return a;
  }

  // g, h, e_n for the alphabet of build_Q.
  inline Assignment canonical_assignment_Q(std::size_t n) {
    return {DihedralElement::rotation(n).to_partial_perm(),
            DihedralElement::reflection(n).to_partial_perm(),
            idempotent(n, static_cast<Point>(n))};
  }

  // Left-to-right product of the letter images; the empty word is the identity.
  inline PartialPerm evaluate(Word const& w, Assignment const& assignment,
                              std::size_t n) {
    PartialPerm acc = PartialPerm::identity(n);
    for (Letter a : w) {
      if (a >= assignment.size()) {
        throw usage_error("evaluate: letter " + std::to_string(a)
                          + " has no assigned value");
      }
      acc = compose(acc, assignment[a]);
    }
    return acc;
  }

  struct SatisfactionFailure {
    std::size_t index;
    PartialPerm lhs_value;
    PartialPerm rhs_value;
  };

  struct SatisfactionReport {
    std::size_t                      checked = 0;
    std::vector<SatisfactionFailure> failures;

    bool all_pass() const noexcept {
      return failures.empty();
    }
  };

  inline SatisfactionReport check_satisfaction(Presentation const& p,
                                               Assignment const&   assignment) {
    if (assignment.size() < p.alphabet().size()) {
      throw usage_error("check_satisfaction: assignment is missing letters");
    }
    SatisfactionReport report;
    auto const&        rels = p.relations();
    for (std::size_t i = 0; i < rels.size(); ++i) {
      PartialPerm l = evaluate(rels[i].lhs, assignment, p.n());
      PartialPerm r = evaluate(rels[i].rhs, assignment, p.n());
      ++report.checked;
      if (!(l == r)) {
        report.failures.push_back({i, l, r});
      }
    }
    return report;
  }

}  // namespace dpc

#endif  // DPC_PRESENTATION_HPP_
