#include "psl/enumeration.hpp"

#include <map>
#include <memory>
#include <numeric>
#include <set>

#include <omp.h>

#include "psl/analysis.hpp"
#include "psl/canonical.hpp"

namespace psl {

Filter parse_filter(std::string_view name) {
  if (name == "one-ge5") return Filter::OneGe5;
  if (name == "im") return Filter::Im;
  throw std::invalid_argument("unknown filter '" + std::string(name) + "' (expected one-ge5 or im)");
}

bool passes_filter(const CellComplex& c, Filter filter) {
  switch (filter) {
    case Filter::None:
      return true;
    case Filter::OneGe5:
      return ge5_faces(c).size() == 1;
    case Filter::Im:
      return is_in_im(c).in_im;
  }
  return false;
}

namespace {

void check_n(int n) {
  if (n < 1 || n > kMaxEnumerationWires) throw NTooLargeError(n);
}

}  // namespace

WordGenerator::WordGenerator(int n, std::vector<int> prefix, int length)
    : n_(n), base_(static_cast<int>(prefix.size())), length_(length < 0 ? full_length(n) : length) {
  check_n(n);
  order_.resize(n);
  std::iota(order_.begin(), order_.end(), 1);
  for (int t : prefix) {
    if (t < 1 || t >= n || order_[t - 1] > order_[t]) throw std::invalid_argument("inadmissible prefix");
    push(t);
  }
  if (base_ > length_) done_ = true;
  cursor_.assign(length_ + 1, 1);
}

void WordGenerator::push(int t) {
  std::swap(order_[t - 1], order_[t]);
  word_.push_back(t);
}

void WordGenerator::pop() {
  int t = word_.back();
  word_.pop_back();
  std::swap(order_[t - 1], order_[t]);
}

bool WordGenerator::next() {
  if (done_) return false;
  if (started_) {
    // Leave the word just emitted.
    if (static_cast<int>(word_.size()) == base_) {
      done_ = true;
      return false;
    }
    pop();
  }
  started_ = true;
  while (true) {
    int depth = static_cast<int>(word_.size());
    if (depth == length_) return true;
    int t = cursor_[depth];
    while (t < n_ && order_[t - 1] > order_[t]) ++t;
    if (t < n_) {
      cursor_[depth] = t + 1;
      cursor_[depth + 1] = 1;
      push(t);
      continue;
    }
    if (depth == base_) {
      done_ = true;
      return false;
    }
    pop();
  }
}

std::vector<std::vector<int>> word_prefixes(int n, int length) {
  std::vector<std::vector<int>> out;
  WordGenerator gen(n, {}, length);
  while (gen.next()) out.push_back(gen.word());
  return out;
}

int partition_depth(int n, int threads) {
  const int total = full_length(n);
  const std::size_t want = static_cast<std::size_t>(std::max(1, threads)) * 16;
  for (int d = 0; d < total; ++d) {
    if (word_prefixes(n, d).size() >= want) return d;
  }
  return total;
}

struct EnumerationStream::State {
  EnumerationOptions options;
  WordGenerator gen;
  std::map<std::vector<int>, bool> seen_forms;  // commutation class -> passes filter
  std::set<CanonicalCertificate> seen_classes;

  explicit State(const EnumerationOptions& o) : options(o), gen(o.n) {}
};

EnumerationStream::EnumerationStream(const EnumerationOptions& options) : state_(std::make_unique<State>(options)) {}
EnumerationStream::~EnumerationStream() = default;
EnumerationStream::EnumerationStream(EnumerationStream&&) noexcept = default;
EnumerationStream& EnumerationStream::operator=(EnumerationStream&&) noexcept = default;

std::optional<WiringDiagram> EnumerationStream::next() {
  State& s = *state_;
  while (s.gen.next()) {
    WiringDiagram d = WiringDiagram::validate(s.options.n, s.gen.word());
    if (!s.options.dedup) {
      if (s.options.filter == Filter::None || passes_filter(CellComplex(d), s.options.filter)) return d;
      continue;
    }
    // Words in one commutation class describe the same labeled complex.
    WiringDiagram nf = normal_form(d);
    if (s.seen_forms.count(nf.swaps())) continue;
    CellComplex c(nf);
    bool keep = passes_filter(c, s.options.filter);
    s.seen_forms.emplace(nf.swaps(), keep);
    if (keep && s.seen_classes.insert(canonical_form(c)).second) return d;
  }
  return std::nullopt;
}

namespace {

int resolve_jobs(int jobs) { return jobs > 0 ? jobs : omp_get_max_threads(); }

/// Raw words passing the filter, grouped per prefix and concatenated in
/// prefix order.
std::vector<std::vector<int>> filtered_words(const EnumerationOptions& o) {
  const int jobs = resolve_jobs(o.jobs);
  const auto prefixes = word_prefixes(o.n, partition_depth(o.n, jobs));
  std::vector<std::vector<std::vector<int>>> parts(prefixes.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (std::size_t i = 0; i < prefixes.size(); ++i) {
    WordGenerator gen(o.n, prefixes[i]);
    while (gen.next()) {
      if (o.filter != Filter::None &&
          !passes_filter(CellComplex(WiringDiagram::validate(o.n, gen.word())), o.filter)) {
        continue;
      }
      parts[i].push_back(gen.word());
    }
  }
  std::vector<std::vector<int>> out;
  for (auto& part : parts) {
    for (auto& w : part) out.push_back(std::move(w));
  }
  return out;
}

std::vector<WiringDiagram> dedup_words(const EnumerationOptions& o, const std::vector<std::vector<int>>& words) {
  // Commutation classes first, then certificates for each distinct class in
  // parallel, then a sequential first-come pass.
  std::vector<std::vector<int>> forms(words.size());
  std::map<std::vector<int>, std::size_t> form_index;
  std::vector<std::vector<int>> distinct;
  for (std::size_t i = 0; i < words.size(); ++i) {
    forms[i] = normal_form(WiringDiagram::validate(o.n, words[i])).swaps();
    if (form_index.emplace(forms[i], distinct.size()).second) distinct.push_back(forms[i]);
  }
  std::vector<CanonicalCertificate> certs(distinct.size());
  const int jobs = resolve_jobs(o.jobs);
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    certs[i] = canonical_form(WiringDiagram::validate(o.n, distinct[i]));
  }
  std::set<CanonicalCertificate> seen;
  std::vector<WiringDiagram> out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (seen.insert(certs[form_index[forms[i]]]).second) out.push_back(WiringDiagram::validate(o.n, words[i]));
  }
  return out;
}

}  // namespace

std::vector<WiringDiagram> enumerate_simple(const EnumerationOptions& options) {
  check_n(options.n);
  auto words = filtered_words(options);
  if (options.dedup) return dedup_words(options, words);
  std::vector<WiringDiagram> out;
  out.reserve(words.size());
  for (auto& w : words) out.push_back(WiringDiagram::validate(options.n, std::move(w)));
  return out;
}

std::uint64_t count_simple(const EnumerationOptions& options) {
  check_n(options.n);
  if (options.dedup) return enumerate_simple(options).size();
  const int jobs = resolve_jobs(options.jobs);
  const auto prefixes = word_prefixes(options.n, partition_depth(options.n, jobs));
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total) num_threads(jobs)
  for (std::size_t i = 0; i < prefixes.size(); ++i) {
    WordGenerator gen(options.n, prefixes[i]);
    while (gen.next()) {
      if (options.filter == Filter::None ||
          passes_filter(CellComplex(WiringDiagram::validate(options.n, gen.word())), options.filter)) {
        ++total;
      }
    }
  }
  return total;
}

}  // namespace psl
