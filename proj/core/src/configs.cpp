#include "semiramsey/configs.hpp"

#include <set>

namespace semiramsey {

namespace {

std::vector<Int> sorted_unique(std::span<const Int> xs) {
  std::vector<Int> out(xs.begin(), xs.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

SyndeticCertificate check_syndetic(std::span<const Int> D, Interval window,
                                   std::span<const Int> K) {
  if (K.empty()) throw EmptyK();
  SyndeticCertificate cert;
  cert.D = sorted_unique(D);
  cert.K = sorted_unique(K);
  cert.window = window;
  if (cert.K.front() < 0) throw MalformedInput("K must lie in Z_+");

  std::vector<char> in_d(static_cast<std::size_t>(std::max<Int>(window.size(), 0)), 0);
  for (Int x : cert.D) {
    if (window.contains(x)) in_d[static_cast<std::size_t>(x - window.lo)] = 1;
  }
  const Int kmin = cert.K.front();
  const Int kmax = cert.K.back();
  cert.checked = Interval{std::max<Int>(0, window.lo - kmin), window.hi - kmax};
  cert.verified = true;
  for (Int t = cert.checked.lo; t <= cert.checked.hi; ++t) {
    bool hit = false;
    for (Int k : cert.K) {
      if (in_d[static_cast<std::size_t>(k + t - window.lo)]) {
        hit = true;
        break;
      }
    }
    if (!hit) {
      cert.verified = false;
      cert.failing_t = t;
      break;
    }
  }
  return cert;
}

SyndeticCertificate min_gap_certificate(std::span<const Int> D, Interval window) {
  std::vector<Int> inside;
  for (Int x : sorted_unique(D)) {
    if (window.contains(x)) inside.push_back(x);
  }
  if (inside.empty()) throw EmptyD();
  // K = {0..k} must exceed every D-free run, the leading and trailing ones
  // included.
  Int k = inside.front() - window.lo;
  for (std::size_t i = 1; i < inside.size(); ++i) {
    k = std::max(k, inside[i] - inside[i - 1] - 1);
  }
  k = std::max(k, window.hi - inside.back());
  std::vector<Int> K(static_cast<std::size_t>(k + 1));
  for (Int i = 0; i <= k; ++i) K[static_cast<std::size_t>(i)] = i;
  auto cert = check_syndetic(D, window, K);
  if (!cert.verified) {
    throw std::logic_error("min_gap_certificate produced an unverified certificate");
  }
  return cert;
}

SyndeticCertificate check_syndetic(const FiniteSemiring& ring, std::span<const Int> D,
                                   std::span<const Int> K) {
  if (K.empty()) throw EmptyK();
  const auto m = static_cast<Int>(ring.size());
  SyndeticCertificate cert;
  cert.D = sorted_unique(D);
  cert.K = sorted_unique(K);
  cert.window = Interval{0, m - 1};
  cert.checked = cert.window;
  for (Int v : cert.D)
    if (v < 0 || v >= m) throw MalformedInput("D element out of range");
  for (Int v : cert.K)
    if (v < 0 || v >= m) throw MalformedInput("K element out of range");
  std::vector<char> in_d(static_cast<std::size_t>(m), 0);
  for (Int v : cert.D) in_d[static_cast<std::size_t>(v)] = 1;
  cert.verified = true;
  for (Int t = 0; t < m; ++t) {
    bool hit = false;
    for (Int k : cert.K) {
      if (in_d[ring.add(static_cast<std::size_t>(k), static_cast<std::size_t>(t))]) {
        hit = true;
        break;
      }
    }
    if (!hit) {
      cert.verified = false;
      cert.failing_t = t;
      break;
    }
  }
  return cert;
}

std::optional<std::vector<Int>> find_syndetic_set(const FiniteSemiring& ring,
                                                  std::span<const Int> D) {
  const std::size_t m = ring.size();
  std::vector<char> in_d(m, 0);
  for (Int v : D) {
    if (v < 0 || static_cast<std::size_t>(v) >= m) throw MalformedInput("D element out of range");
    in_d[static_cast<std::size_t>(v)] = 1;
  }
  // covers[k] = translates t with k + t in D.
  std::vector<std::vector<std::size_t>> covers(m);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t t = 0; t < m; ++t)
      if (in_d[ring.add(k, t)]) covers[k].push_back(t);
  std::vector<char> done(m, 0);
  std::size_t remaining = m;
  std::vector<Int> K;
  while (remaining > 0) {
    std::size_t best = m, best_gain = 0;
    for (std::size_t k = 0; k < m; ++k) {
      std::size_t gain = 0;
      for (std::size_t t : covers[k]) gain += done[t] ? 0 : 1;
      if (gain > best_gain) {
        best_gain = gain;
        best = k;
      }
    }
    if (best_gain == 0) return std::nullopt;
    K.push_back(static_cast<Int>(best));
    for (std::size_t t : covers[best]) {
      if (!done[t]) {
        done[t] = 1;
        --remaining;
      }
    }
  }
  std::sort(K.begin(), K.end());
  return K;
}

FSPrefix fs_prefix(std::span<const Int> generators, const NatWindow& ring) {
  if (generators.empty()) throw MalformedInput("FS prefix needs at least one generator");
  FSPrefix out;
  out.generators.assign(generators.begin(), generators.end());
  std::set<Int> sums;
  for (Int g : generators) {
    if (!ring.contains(g)) throw Overflow("generator outside the window");
    // Every new sum is g alone or g plus an earlier sum; subsets stay
    // distinct-index by construction.
    std::vector<Int> fresh{g};
    for (Int s : sums) fresh.push_back(ring.add(s, g));
    sums.insert(fresh.begin(), fresh.end());
  }
  out.sums.assign(sums.begin(), sums.end());
  return out;
}

std::vector<Int> fs_intersection(const FSPrefix& prefix, std::span<const Int> D) {
  auto d = sorted_unique(D);
  std::vector<Int> out;
  std::set_intersection(prefix.sums.begin(), prefix.sums.end(), d.begin(), d.end(),
                        std::back_inserter(out));
  return out;
}

}  // namespace semiramsey
