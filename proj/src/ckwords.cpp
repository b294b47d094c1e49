#include "ckms/ckwords.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "ckms/errors.hpp"
#include "ckms/scalar.hpp"

namespace ckms {

NormalForm NormalForm::unit() { return monomial({}, {}); }

NormalForm NormalForm::monomial(Indices J, Indices K, Rational coeff) {
  NormalForm out;
  out.add(Monomial{std::move(J), std::move(K)}, coeff);
  return out;
}

void NormalForm::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

NormalForm& NormalForm::operator+=(const NormalForm& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

NormalForm& NormalForm::operator-=(const NormalForm& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

NormalForm& NormalForm::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

namespace {

void check_index(const ZeroOneMatrix& A, int i) {
  if (i < 1 || static_cast<std::size_t>(i) > A.dim())
    throw DomainError("generator index " + std::to_string(i) + " outside 1.." + std::to_string(A.dim()));
}

bool edge(const ZeroOneMatrix& A, int i, int j) { return A(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) != 0; }

bool admissible_word(const ZeroOneMatrix& A, const Word& w) {
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    const Letter& a = w[p];
    const Letter& b = w[p + 1];
    if (!a.starred && !b.starred && !edge(A, a.index, b.index)) return false;
    if (a.starred && b.starred && !edge(A, b.index, a.index)) return false;
  }
  return true;
}

std::ptrdiff_t find_redex(const Word& w, Strategy s) {
  std::ptrdiff_t found = -1;
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    if (w[p].starred && !w[p + 1].starred) {
      found = static_cast<std::ptrdiff_t>(p);
      if (s == Strategy::leftmost) break;
    }
  }
  return found;
}

Monomial to_monomial(const Word& w) {
  Monomial m;
  for (const auto& l : w) (l.starred ? m.K : m.J).push_back(l.index);
  std::reverse(m.K.begin(), m.K.end());
  return m;
}

std::vector<Monomial> expand(const ZeroOneMatrix& A, const Monomial& m) {
  const int n = static_cast<int>(A.dim());
  std::vector<Monomial> out;
  for (int l = 1; l <= n; ++l) {
    if (m.J.empty() && m.K.empty()) {
      out.push_back({{l}, {l}});
    } else if (m.K.empty()) {
      if (!edge(A, m.J.back(), l)) continue;
      Monomial e{m.J, {l}};
      e.J.push_back(l);
      out.push_back(std::move(e));
    } else if (m.J.empty()) {
      if (!edge(A, m.K.back(), l)) continue;
      Monomial e{{l}, m.K};
      e.K.push_back(l);
      out.push_back(std::move(e));
    } else {
      if (!edge(A, m.J.back(), l) || !edge(A, m.K.back(), l)) continue;
      Monomial e{m.J, m.K};
      e.J.push_back(l);
      e.K.push_back(l);
      out.push_back(std::move(e));
    }
  }
  return out;
}

std::size_t depth(const Monomial& m) { return std::min(m.J.size(), m.K.size()); }

}  // namespace

bool is_admissible(const ZeroOneMatrix& A, const Indices& J) {
  for (int j : J) check_index(A, j);
  for (std::size_t t = 0; t + 1 < J.size(); ++t)
    if (!edge(A, J[t], J[t + 1])) return false;
  return true;
}

Word to_word(const Monomial& m) {
  Word w;
  for (int j : m.J) w.push_back({j, false});
  for (auto it = m.K.rbegin(); it != m.K.rend(); ++it) w.push_back({*it, true});
  return w;
}

long termination_measure(const Word& w) {
  long measure = 0, unstarred_right = 0;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (it->starred)
      measure += unstarred_right;
    else
      ++unstarred_right;
  }
  return measure;
}

NormalForm normalize(const ZeroOneMatrix& A, const Word& word, Strategy strategy, std::vector<RewriteStep>* trace) {
  for (const auto& l : word) check_index(A, l.index);
  NormalForm out;
  std::vector<std::pair<Word, Rational>> work{{word, Rational(1)}};
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    if (!admissible_word(A, w)) continue;
    const std::ptrdiff_t p = find_redex(w, strategy);
    if (p < 0) {
      out.add(to_monomial(w), c);
      continue;
    }
    const auto pos = static_cast<std::size_t>(p);
    RewriteStep step{trace ? termination_measure(w) : 0, -1};
    const int i = w[pos].index;
    if (i == w[pos + 1].index) {
      for (int k = 1; k <= static_cast<int>(A.dim()); ++k) {
        if (!edge(A, i, k)) continue;
        Word next = w;
        next[pos] = {k, false};
        next[pos + 1] = {k, true};
        if (trace) step.after = std::max(step.after, termination_measure(next));
        work.emplace_back(std::move(next), c);
      }
    }
    if (trace) trace->push_back(step);
  }
  return out;
}

NormalForm multiply(const ZeroOneMatrix& A, const NormalForm& x, const NormalForm& y) {
  NormalForm out;
  for (const auto& [mx, cx] : x.terms()) {
    const Word wx = to_word(mx);
    for (const auto& [my, cy] : y.terms()) {
      Word w = wx;
      const Word wy = to_word(my);
      w.insert(w.end(), wy.begin(), wy.end());
      out += (cx * cy) * normalize(A, w);
    }
  }
  return out;
}

NormalForm adjoint(const NormalForm& x) {
  NormalForm out;
  for (const auto& [m, c] : x.terms()) out.add(Monomial{m.K, m.J}, c);
  return out;
}

bool equivalent(const ZeroOneMatrix& A, const NormalForm& x, const NormalForm& y) {
  const NormalForm diff = x - y;
  // Expansion preserves |J| - |K|, so each difference class is compared on its own.
  std::map<long, std::vector<std::pair<Monomial, Rational>>> groups;
  for (const auto& [m, c] : diff.terms())
    groups[static_cast<long>(m.J.size()) - static_cast<long>(m.K.size())].emplace_back(m, c);
  for (auto& [d, terms] : groups) {
    // one level past the deepest term, so that vanishing monomials such as s_i s_j^* with no common successor drop out
    std::size_t target = 0;
    for (const auto& t : terms) target = std::max(target, depth(t.first) + 1);
    NormalForm level;
    while (!terms.empty()) {
      auto [m, c] = std::move(terms.back());
      terms.pop_back();
      if (depth(m) >= target) {
        level.add(m, c);
        continue;
      }
      for (auto& e : expand(A, m)) terms.emplace_back(std::move(e), c);
    }
    if (!level.is_zero()) return false;
  }
  return true;
}

Word parse_word(const std::string& text, std::size_t n) {
  std::istringstream in(text);
  Word w;
  std::string tok;
  while (in >> tok) {
    bool starred = false;
    if (!tok.empty() && tok.back() == '*') {
      starred = true;
      tok.pop_back();
    }
    if (tok.size() < 2 || tok[0] != 's' ||
        !std::all_of(tok.begin() + 1, tok.end(), [](unsigned char ch) { return std::isdigit(ch); }))
      throw DomainError("bad word token '" + tok + "': expected s<index> or s<index>*");
    if (tok.size() > 8) throw DomainError("generator index too large in '" + tok + "'");
    const int idx = std::stoi(tok.substr(1));
    if (idx < 1 || static_cast<std::size_t>(idx) > n)
      throw DomainError("generator index " + std::to_string(idx) + " outside 1.." + std::to_string(n));
    w.push_back({idx, starred});
  }
  return w;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += ' ';
    s += "s" + std::to_string(l.index) + (l.starred ? "*" : "");
  }
  return s;
}

std::string to_string(const Monomial& m) { return to_string(to_word(m)); }

std::string to_string(const NormalForm& x) {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : x.terms()) {
    if (!s.empty()) s += " + ";
    if (c != 1) s += "(" + to_string(c) + ") ";
    s += to_string(m);
  }
  return s;
}

std::vector<Indices> admissible_words(const ZeroOneMatrix& A, std::size_t max_len, std::size_t cap) {
  std::vector<Indices> out{Indices{}};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t w = level_begin; w < level_end; ++w) {
      for (int l = 1; l <= static_cast<int>(A.dim()); ++l) {
        if (!out[w].empty() && !edge(A, out[w].back(), l)) continue;
        if (out.size() >= cap) throw ResourceLimit("admissible word enumeration exceeds cap " + std::to_string(cap));
        Indices next = out[w];
        next.push_back(l);
        out.push_back(std::move(next));
      }
    }
    level_begin = level_end;
  }
  return out;
}

}  // namespace ckms
