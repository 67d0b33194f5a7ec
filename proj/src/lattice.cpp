#include "cylwalk/lattice.hpp"

#include <algorithm>
#include <exception>
#include <iterator>
#include <numeric>
#include <string>
#include <thread>

#include "cylwalk/error.hpp"

namespace cylwalk {

namespace {

std::string list_str(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

int floor_div(int num, int den) {
  int q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

FamilySignature signature_from_lifted(const std::vector<int>& lifted, const CylinderConfig& config) {
  const int r = config.r();
  FamilySignature sig;
  sig.offsets.resize(r);
  std::vector<int> target(r), label_shift(r);
  for (int i = 0; i < r; ++i) {
    const int L = lifted[i];
    int j = 0;
    while (j < r && (L - config.e[j]) % config.M != 0) ++j;
    if (j == r) throw Error(ErrorKind::NotCyclic, "path " + std::to_string(i) + " does not end at an endpoint");
    const int s = floor_div(L - config.e[j], config.M);
    target[i] = j;
    sig.offsets[i] = s;
    label_shift[i] = (j + 1 + s * r) - (i + 1);
  }
  const int p = ((target[0] % r) + r) % r;
  for (int i = 0; i < r; ++i) {
    if (((target[i] - i) % r + r) % r != p) {
      throw Error(ErrorKind::NotCyclic, "endpoint assignment of " + list_str(lifted) + " is not a power of the full cycle");
    }
  }
  sig.lift_consistent = std::all_of(label_shift.begin(), label_shift.end(), [&](int v) { return v == label_shift[0]; });
  sig.shift = sig.lift_consistent ? label_shift[0] : p;
  sig.sign = cyclic_sign(r, p);
  return sig;
}

struct Partial {
  std::vector<WalkerFamily> families;
  std::uint64_t count = 0;
  LaurentPoly2 signed_gf;
  LaurentPoly2 unsigned_gf;
  std::exception_ptr failure;
};

void enumerate_range(const CylinderConfig& config, std::uint64_t lo, std::uint64_t hi, bool keep, Partial& out) {
  const int r = config.r();
  const int N = config.N;
  const int M = config.M;
  const int total = r * N;

  std::vector<int> pos(r), lifted(r), left(r);
  std::vector<int> ends_sorted(r);

  for (std::uint64_t index = lo; index < hi; ++index) {
    for (int i = 0; i < r; ++i) {
      pos[i] = config.a[i];
      lifted[i] = config.a[i];
      left[i] = 0;
    }
    bool ok = true;
    for (int s = 0; s < N && ok; ++s) {
      for (int i = 0; i < r; ++i) {
        const int bit = total - 1 - (i * N + s);
        if ((index >> bit) & 1U) {
          --lifted[i];
          ++left[i];
          pos[i] = pos[i] == 0 ? M - 1 : pos[i] - 1;
        } else {
          ++lifted[i];
          pos[i] = pos[i] == M - 1 ? 0 : pos[i] + 1;
        }
      }
      for (int i = 0; i < r && ok; ++i)
        for (int j = i + 1; j < r; ++j)
          if (pos[i] == pos[j]) {
            ok = false;
            break;
          }
    }
    if (!ok) continue;

    // Level N positions are pairwise distinct, so comparing sorted lists
    // checks the bijection onto {e_j}.
    ends_sorted = pos;
    std::sort(ends_sorted.begin(), ends_sorted.end());
    if (ends_sorted != config.e) continue;

    const FamilySignature sig = signature_from_lifted(lifted, config);
    const int sum_left = std::accumulate(left.begin(), left.end(), 0);
    const int sum_off = std::accumulate(sig.offsets.begin(), sig.offsets.end(), 0);
    out.unsigned_gf.add_term(1, sum_left, sum_off);
    out.signed_gf.add_term(sig.sign, sum_left, sum_off);
    ++out.count;

    if (keep) {
      WalkerFamily fam;
      fam.index = index;
      fam.steps = decode_steps(index, r, N);
      fam.offsets = sig.offsets;
      fam.left_counts = left;
      fam.shift = sig.shift;
      fam.sign = sig.sign;
      fam.lift_consistent = sig.lift_consistent;
      out.families.push_back(std::move(fam));
    }
  }
}

}  // namespace

CylinderConfig validate_config(int M, int N, std::vector<int> a, std::vector<int> e) {
  if (M <= 1) throw Error(ErrorKind::BadCylinder, "circumference M must exceed 1, got " + std::to_string(M));
  if (N < 0) throw Error(ErrorKind::BadCylinder, "path length N must be nonnegative, got " + std::to_string(N));
  if (a.empty() || a.size() != e.size()) {
    throw Error(ErrorKind::BadDimensions,
                "need equally many (and at least one) start and end points, got " + std::to_string(a.size()) + " and " +
                    std::to_string(e.size()));
  }
  for (const auto* list : {&a, &e}) {
    for (int v : *list) {
      if (v < 0 || v >= M) throw Error(ErrorKind::OutOfRange, "entry " + std::to_string(v) + " not in [0, M)");
    }
    for (std::size_t i = 1; i < list->size(); ++i) {
      if ((*list)[i - 1] >= (*list)[i]) throw Error(ErrorKind::NotStrictlyIncreasing, list_str(*list) + " is not strictly increasing");
    }
  }
  for (int ei : e) {
    for (int aj : a) {
      if ((N - ei + aj) % 2 != 0) {
        throw Error(ErrorKind::ParityViolation, "N - e_i + a_j = " + std::to_string(N) + " - " + std::to_string(ei) +
                                                    " + " + std::to_string(aj) + " is odd");
      }
    }
  }
  return CylinderConfig{M, N, std::move(a), std::move(e)};
}

int WalkerFamily::total_offset() const { return std::accumulate(offsets.begin(), offsets.end(), 0); }
int WalkerFamily::total_left() const { return std::accumulate(left_counts.begin(), left_counts.end(), 0); }

int cyclic_sign(int r, int p) {
  if (r % 2 == 1) return 1;
  return (p % 2 == 0) ? 1 : -1;
}

std::vector<std::vector<Step>> decode_steps(std::uint64_t index, int r, int N) {
  std::vector<std::vector<Step>> steps(r, std::vector<Step>(N));
  const int total = r * N;
  for (int i = 0; i < r; ++i)
    for (int s = 0; s < N; ++s)
      steps[i][s] = ((index >> (total - 1 - (i * N + s))) & 1U) ? Step::Clockwise : Step::CounterClockwise;
  return steps;
}

std::vector<int> lifted_endpoints(const WalkerFamily& family, const CylinderConfig& config) {
  std::vector<int> lifted(config.a);
  for (std::size_t i = 0; i < family.steps.size(); ++i)
    for (Step st : family.steps[i]) lifted[i] += st == Step::Clockwise ? -1 : 1;
  return lifted;
}

FamilySignature family_signature(const WalkerFamily& family, const CylinderConfig& config) {
  return signature_from_lifted(lifted_endpoints(family, config), config);
}

FamilyEnumeration enumerate_families(const CylinderConfig& config, const EnumerationOptions& options) {
  const int total = config.r() * config.N;
  if (total > options.max_total_steps || total > 62) {
    throw Error(ErrorKind::CapExceeded, "r*N = " + std::to_string(total) + " exceeds the enumeration cap of " +
                                            std::to_string(options.max_total_steps));
  }
  const std::uint64_t count = std::uint64_t{1} << total;

  unsigned workers = options.workers == 0 ? std::max(1U, std::thread::hardware_concurrency()) : options.workers;
  if (count < 4096) workers = 1;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, count));

  std::vector<Partial> parts(workers);
  {
    std::vector<std::jthread> threads;
    const std::uint64_t chunk = count / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = w * chunk;
      const std::uint64_t hi = (w + 1 == workers) ? count : lo + chunk;
      if (workers == 1) {
        enumerate_range(config, lo, hi, options.keep_families, parts[w]);
      } else {
        threads.emplace_back([&, lo, hi, w] {
          try {
            enumerate_range(config, lo, hi, options.keep_families, parts[w]);
          } catch (...) {
            parts[w].failure = std::current_exception();
          }
        });
      }
    }
  }

  for (const auto& part : parts)
    if (part.failure) std::rethrow_exception(part.failure);

  FamilyEnumeration out;
  for (auto& part : parts) {
    out.family_count += part.count;
    out.signed_gf += part.signed_gf;
    out.unsigned_gf += part.unsigned_gf;
    std::move(part.families.begin(), part.families.end(), std::back_inserter(out.families));
  }
  return out;
}

}  // namespace cylwalk
