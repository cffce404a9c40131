#include "siegel/poles.hpp"

#include "siegel/error.hpp"

#include <algorithm>
#include <map>

namespace siegel {

namespace {

void require_even_weight(int k) {
  if (k < 1 || k % 2 != 0) throw DomainError("k must be a positive even integer");
}

std::vector<PoleEntry> sorted(const std::map<long, int>& at) {
  std::vector<PoleEntry> out;
  for (auto [s, order] : at) out.push_back({Rational(s), order});
  return out;
}

}  // namespace

PoleTable feit_poles(int n, int k) {
  if (n < 1) throw DomainError("n must be positive");
  require_even_weight(k);
  PoleTable t;
  t.context = "feit";
  t.region = "k+2Re(s)>" + std::to_string(n / 2);
  if (2 * k >= n) {
    if (n % 4 != 0) {
      t.case_label = "i";
    } else {
      t.case_label = "ii";
      t.poles.push_back({make_rational(n / 2 + 1 - k, 2), 1});
    }
    return t;
  }
  t.case_label = "iii";
  for (int m = (n + 3) / 2; m <= n - k + 1; ++m) t.poles.push_back({make_rational(m - k, 2), 1});
  return t;
}

PoleTable klingen_poles(int p, int q, int k) {
  if (q < 1 || p < q) throw DomainError("klingen63 needs 1 <= q <= p");
  require_even_weight(k);
  PoleTable t;
  t.context = "klingen63";
  t.conditional = true;
  const int eps = q % 2;
  if (2 * k >= p + q) {
    if ((p + q) % 4 != 0) {
      t.case_label = "i";
    } else if (p == q && q % 2 == 0) {
      t.case_label = "ii.1";
    } else if (p - q == 2 && q % 2 == 1) {
      t.case_label = "ii.2";
    } else {
      t.case_label = "ii";
    }
    if (t.case_label != "i" && t.case_label != "ii") {
      t.poles.push_back({make_rational(p - q, 2), 1});
      t.poles.push_back({make_rational(p - q, 2) + 1, 1});
    }
    return t;
  }
  if (k >= q + eps + 2) {
    t.case_label = "iii";
    return t;
  }
  if (k > q + eps) throw DomainError("parameters fall outside every case of the theorem");
  t.case_label = "iv";
  const int cap = (q + eps - k) / 2;
  std::map<long, int> at;
  for (int j = 0; j <= (p + q) / 2 - k; ++j) {
    const int order = std::min(j / 2, cap) + 1;
    at[k - q + j] = order;
    at[p - k + 1 - j] = order;
  }
  std::vector<PoleEntry> poles = sorted(at);
  if ((p + q) % 2 == 1 && cap > 0) {
    poles.push_back({make_rational(p - q + 1, 2), cap});
    std::sort(poles.begin(), poles.end(), [](const PoleEntry& a, const PoleEntry& b) { return a.s < b.s; });
  }
  t.poles = std::move(poles);
  return t;
}

PoleTable lambda_poles(int q, int k) {
  if (q < 1) throw DomainError("q must be positive");
  require_even_weight(k);
  PoleTable t;
  t.context = "lambda64";
  t.conditional = true;
  if (k >= q) {
    t.case_label = "i";
    if (q % 2 == 0) t.poles = {{Rational(0), 1}, {Rational(1), 1}};
    return t;
  }
  t.case_label = "ii";
  std::map<long, int> at;
  for (int j = 0; j <= q - k; ++j) {
    at[k - q + j] = j / 2 + 1;
    at[q - k + 1 - j] = j / 2 + 1;
  }
  t.poles = sorted(at);
  return t;
}

}  // namespace siegel
