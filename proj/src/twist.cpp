#include "coxtwist/twist.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "coxtwist/error.hpp"

namespace coxtwist {

Twist::Twist(std::shared_ptr<const CoxeterGroup> group, Automorphism theta)
    : group_(std::move(group)), theta_(std::move(theta)) {
  if (theta_.size() != group_->rank())
    throw Error(ErrorCode::InvalidInput, "theta has the wrong size");
}

Element Twist::act(Element w, Generator s) const {
  const Element ws = group_->multiply(w, s, Side::Right);
  const Element x = group_->multiply(ws, theta_(s), Side::Left);
  return x == w ? ws : x;
}

bool Twist::isFirstBranch(Element w, Generator s) const {
  const Element ws = group_->multiply(w, s, Side::Right);
  return group_->multiply(ws, theta_(s), Side::Left) == w;
}

TwistedInvolution Twist::evalShat(const ShatWord& word) const {
  Element w = group_->identity();
  for (Generator s : word.letters) {
    if (s >= group_->rank())
      throw Error(ErrorCode::InvalidInput, "generator out of range");
    w = act(w, s);
  }
  return TwistedInvolution{w, rankOf(w), absoluteLengthOf(w)};
}

Word Twist::ordExpand(const ShatWord& word) const {
  std::deque<Generator> out;
  Element w = group_->identity();
  for (Generator s : word.letters) {
    if (!isFirstBranch(w, s)) out.push_front(theta_(s));
    out.push_back(s);
    w = act(w, s);
  }
  return {out.begin(), out.end()};
}

bool Twist::isReducedShat(const ShatWord& word) const {
  Element w = group_->identity();
  std::size_t rank = 0;
  for (Generator s : word.letters) {
    w = act(w, s);
    if (rankOf(w) != ++rank) return false;
  }
  return true;
}

bool Twist::isTwistedInvolution(Element w) const {
  return group_->applyAutomorphism(theta_, w) == group_->inverse(w);
}

TwistedInvolution Twist::twistedInvolution(Element w) const {
  if (!isTwistedInvolution(w))
    throw Error(ErrorCode::InvalidInput,
                "element " + formatWord(group_->normalForm(w)) +
                    " is not a twisted involution");
  return TwistedInvolution{w, rankOf(w), absoluteLengthOf(w)};
}

std::size_t Twist::rankOf(Element w) const {
  // Walk down along smallest right descents until a known rank is hit.
  std::vector<Element> chain;
  std::size_t base = 0;
  Element x = w;
  while (true) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = rank_memo_.find(x.id); it != rank_memo_.end()) {
        base = it->second;
        break;
      }
    }
    if (x == group_->identity()) break;
    chain.push_back(x);
    x = act(x, group_->rightDescents(x).first());
  }
  std::lock_guard lock(mutex_);
  for (auto it = chain.rbegin(); it != chain.rend(); ++it)
    rank_memo_[it->id] = ++base;
  return chain.empty() ? base : rank_memo_[w.id];
}

std::size_t Twist::absoluteLengthOf(Element w) const {
  std::vector<std::pair<Element, bool>> chain;
  std::size_t base = 0;
  Element x = w;
  while (true) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = abs_memo_.find(x.id); it != abs_memo_.end()) {
        base = it->second;
        break;
      }
    }
    if (x == group_->identity()) break;
    const Generator s = group_->rightDescents(x).first();
    const Element below = act(x, s);
    chain.emplace_back(x, isFirstBranch(below, s));
    x = below;
  }
  std::lock_guard lock(mutex_);
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    base += it->second ? 1 : 0;
    abs_memo_[it->first.id] = base;
  }
  return base;
}

GeneratorSet Twist::shatRightDescents(const TwistedInvolution& w) const {
  GeneratorSet out;
  const std::size_t r = rankOf(w.element);
  for (Generator s = 0; s < group_->rank(); ++s)
    if (rankOf(act(w.element, s)) + 1 == r) out.insert(s);
  return out;
}

std::size_t Twist::shatExchange(const ShatWord& word, Generator s) const {
  if (!isReducedShat(word))
    throw Error(ErrorCode::NotReduced, formatWord(word) + " is not reduced");
  const TwistedInvolution w = evalShat(word);
  if (!group_->isRightDescent(w.element, s))
    throw Error(ErrorCode::NotDescent,
                "s" + std::to_string(s + 1) + " is not a right descent");
  const Element target = act(w.element, s);
  for (std::size_t i = 0; i < word.size(); ++i) {
    ShatWord shorter = word;
    shorter.letters.erase(shorter.letters.begin() +
                          static_cast<std::ptrdiff_t>(i));
    if (evalShat(shorter).element == target) return i;
  }
  throw std::logic_error("exchange property failed for " + formatWord(word));
}

std::size_t Twist::twistedAbsoluteLength(const ShatWord& word) const {
  if (!isReducedShat(word))
    throw Error(ErrorCode::NotReduced, formatWord(word) + " is not reduced");
  std::size_t count = 0;
  Element w = group_->identity();
  for (Generator s : word.letters) {
    if (isFirstBranch(w, s)) ++count;
    w = act(w, s);
  }
  return count;
}

std::vector<TwistedInvolution> Twist::enumerateTwistedInvolutions(
    std::optional<std::size_t> max_rank) const {
  if (!max_rank && !group_->isFinite())
    throw Error(ErrorCode::NotFinite,
                "a rank bound is required for an infinite group");
  std::vector<TwistedInvolution> out;
  std::vector<Element> level{group_->identity()};
  for (std::size_t r = 0; !level.empty(); ++r) {
    for (Element w : level) out.push_back({w, r, absoluteLengthOf(w)});
    if (max_rank && r >= *max_rank) break;
    std::unordered_set<Element, ElementHash> next;
    for (Element w : level) {
      const GeneratorSet descents = group_->rightDescents(w);
      for (Generator s = 0; s < group_->rank(); ++s)
        if (!descents.contains(s)) next.insert(act(w, s));
    }
    std::vector<std::pair<Word, Element>> keyed;
    for (Element x : next) keyed.emplace_back(group_->normalForm(x), x);
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
      return a.first.size() != b.first.size() ? a.first.size() < b.first.size()
                                              : a.first < b.first;
    });
    level.clear();
    for (auto& [nf, x] : keyed) level.push_back(x);
  }
  return out;
}

std::shared_ptr<const std::vector<ShatWord>> Twist::reducedExpressions(
    const TwistedInvolution& w) const {
  return expressionsOf(w.element);
}

std::shared_ptr<const std::vector<ShatWord>> Twist::expressionsOf(
    Element w) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = expression_memo_.find(w.id); it != expression_memo_.end())
      return it->second;
  }
  auto out = std::make_shared<std::vector<ShatWord>>();
  if (w == group_->identity()) {
    out->emplace_back();
  } else {
    for (Generator s : group_->rightDescents(w).members()) {
      const auto below = expressionsOf(act(w, s));
      for (const ShatWord& e : *below) {
        ShatWord longer = e;
        longer.letters.push_back(s);
        out->push_back(std::move(longer));
      }
    }
    std::sort(out->begin(), out->end());
  }
  std::lock_guard lock(mutex_);
  return expression_memo_.emplace(w.id, std::move(out)).first->second;
}

std::uint64_t Twist::countReducedExpressions(const TwistedInvolution& w) const {
  auto count = [this](auto&& self, Element x) -> std::uint64_t {
    {
      std::lock_guard lock(mutex_);
      if (auto it = count_memo_.find(x.id); it != count_memo_.end())
        return it->second;
    }
    std::uint64_t total = 0;
    if (x == group_->identity()) {
      total = 1;
    } else {
      for (Generator s : group_->rightDescents(x).members())
        total += self(self, act(x, s));
    }
    std::lock_guard lock(mutex_);
    count_memo_[x.id] = total;
    return total;
  };
  return count(count, w.element);
}

ShatWord Twist::standardExpression(const TwistedInvolution& w) const {
  ShatWord out;
  Element x = w.element;
  while (x != group_->identity()) {
    const Generator s = group_->rightDescents(x).first();
    out.letters.push_back(s);
    x = act(x, s);
  }
  std::reverse(out.letters.begin(), out.letters.end());
  return out;
}

bool Twist::bruhatLE(const TwistedInvolution& u,
                     const TwistedInvolution& w) const {
  if (u.rank > w.rank) return false;
  std::unordered_set<Element, ElementHash> reachable{group_->identity()};
  for (Generator s : standardExpression(w).letters) {
    std::vector<Element> grown;
    for (Element x : reachable)
      if (!group_->isRightDescent(x, s)) grown.push_back(act(x, s));
    reachable.insert(grown.begin(), grown.end());
  }
  return reachable.contains(u.element);
}

void Twist::clearCaches() const {
  std::lock_guard lock(mutex_);
  rank_memo_.clear();
  abs_memo_.clear();
  count_memo_.clear();
  expression_memo_.clear();
}

}  // namespace coxtwist
