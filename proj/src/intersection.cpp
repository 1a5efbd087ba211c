#include "twlab/intersection.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <stdexcept>

#include "twlab/subsets.hpp"

namespace twlab {

namespace {

// The W/C/H constructors are memoized: identity sweeps and algebra
// builders request the same matrices thousands of times.  Map nodes are
// stable, so returned references stay valid for the program's lifetime.
std::map<std::array<int, 5>, ExactMatrix> g_cache;
std::mutex g_cache_mutex;

enum BuildKind { kW = 0, kC = 1, kH = 2 };

ExactMatrix build_fresh(BuildKind kind, int v, int i, int j, int l) {
  const auto rows = enumerate_subsets(v, i);
  const auto cols = enumerate_subsets(v, j);
  std::vector<MatrixEntry> entries;
  for (Index r = 0; r < static_cast<Index>(rows.size()); ++r) {
    for (Index c = 0; c < static_cast<Index>(cols.size()); ++c) {
      const int isz = intersect_size(rows[static_cast<std::size_t>(r)],
                                     cols[static_cast<std::size_t>(c)]);
      switch (kind) {
        case kW:
          if (isz == i) entries.push_back({r, c, Rational(1)});
          break;
        case kC: {
          Int b = binomial(isz, l);
          if (b != 0) entries.push_back({r, c, Rational(b)});
          break;
        }
        case kH:
          if (isz == l) entries.push_back({r, c, Rational(1)});
          break;
      }
    }
  }
  return ExactMatrix::from_entries(
      static_cast<Index>(rows.size()), static_cast<Index>(cols.size()),
      subset_space_tag(v, i), subset_space_tag(v, j), std::move(entries));
}

const ExactMatrix& build_cached(BuildKind kind, int v, int i, int j, int l) {
  if (v < 0 || v > kMaxGroundSet || i < 0 || i > v || j < 0 || j > v)
    throw std::invalid_argument("intersection matrix: need 0 <= i,j <= v");
  const std::array<int, 5> key{kind, v, i, j, kind == kW ? 0 : l};
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto it = g_cache.find(key);
  if (it == g_cache.end())
    it = g_cache.emplace(key, build_fresh(kind, v, i, j, l)).first;
  return it->second;
}

Rational binom_q(long n, long k) { return Rational(binomial(n, k)); }

}  // namespace

std::string subset_space_tag(int v, int k) {
  return "C(" + std::to_string(v) + "," + std::to_string(k) + ")";
}

const ExactMatrix& build_W(int v, int i, int j) {
  return build_cached(kW, v, i, j, 0);
}

const ExactMatrix& build_C(int v, int i, int j, int l) {
  return build_cached(kC, v, i, j, l);
}

const ExactMatrix& build_H(int v, int i, int j, int l) {
  return build_cached(kH, v, i, j, l);
}

LevelRange level_range(int i, int j, int v) {
  return LevelRange{std::max(0, i + j - v), std::min(i, j)};
}

Index level_count(int i, int j, int v) { return level_range(i, j, v).count(); }

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = {
      "w_compose",    // W_{i,j} W_{j,k} = binom(k-i, j-i) W_{i,k}
      "c_as_h_sum",   // C^l = sum_g binom(g,l) H^g
      "wt_w",         // W_{i,j}^t W_{i,k} = C^i_{j,k}
      "c_w",          // C^l_{i,j} W_{j,k} = binom(k-l, j-l) C^l_{i,k}
      "w_wt",         // W_{i,k} W_{j,k}^t as a C^l_{i,j} sum
      "w_c",          // W_{i,j} C^l_{j,k} as a C^h_{i,k} sum
      "c_c",          // C^l_{i,j} C^s_{j,k} as a C^h_{i,k} sum
      "w_wt_step",    // W_{i,i+1} W_{j,i+1}^t = (v-i-j) C^j + C^{j-1}
      "w_wt_alt",     // W_{i,k} W_{j,k}^t, shifted-index expansion
      "w_c_printed_bound",  // w_c with lower bound max(0, l+j-i): probe
  };
  return names;
}

namespace {

using Params = std::vector<std::pair<std::string, int>>;

int get_param(const Params& params, const std::string& key) {
  for (const auto& [k, val] : params)
    if (k == key) return val;
  throw std::invalid_argument("verify_identity: missing parameter " + key);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("verify_identity: " + what);
}

IdentityResult make_result(const std::string& name, int v, Params params,
                           const ExactMatrix& lhs, const ExactMatrix& rhs,
                           bool probe) {
  IdentityResult res;
  res.identity = name;
  res.v = v;
  res.params = std::move(params);
  res.erratum_probe = probe;
  res.holds = !first_difference(lhs, rhs, &res.witness);
  return res;
}

// RHS of the W_{i,j} C^l_{j,k} expansion with a chosen lower summation
// bound; the commonly printed bound max(0, l+j-i) and the corrected
// max(0, l+i-j) are both reachable so the discrepancy can be probed.
ExactMatrix w_c_rhs(int v, int i, int j, int k, int l, int lower) {
  ExactMatrix rhs = ExactMatrix::zero(binomial_index(v, i),
                                      binomial_index(v, k),
                                      subset_space_tag(v, i),
                                      subset_space_tag(v, k));
  for (int h = lower; h <= std::min(l, i); ++h) {
    Rational coef =
        binom_q(v - l - i, j - l - i + h) * binom_q(k - h, l - h);
    if (!is_zero(coef)) rhs = mat_add(rhs, mat_scale(coef, build_C(v, i, k, h)));
  }
  return rhs;
}

}  // namespace

IdentityResult verify_identity(const std::string& name, int v,
                               const Params& params) {
  require(v >= 0 && v <= kMaxGroundSet, "ground size out of range");

  if (name == "w_compose") {
    const int i = get_param(params, "i"), j = get_param(params, "j"),
              k = get_param(params, "k");
    require(0 <= i && i <= j && j <= k && k <= v, "need 0 <= i <= j <= k <= v");
    ExactMatrix lhs = mat_mul(build_W(v, i, j), build_W(v, j, k));
    ExactMatrix rhs = mat_scale(binom_q(k - i, j - i), build_W(v, i, k));
    return make_result(name, v, params, lhs, rhs, false);
  }

  if (name == "c_as_h_sum") {
    const int i = get_param(params, "i"), j = get_param(params, "j"),
              l = get_param(params, "l");
    require(0 <= i && i <= v && 0 <= j && j <= v, "need 0 <= i,j <= v");
    const ExactMatrix& lhs = build_C(v, i, j, l);
    ExactMatrix rhs = ExactMatrix::zero(lhs.rows(), lhs.cols(), lhs.row_tag(),
                                        lhs.col_tag());
    for (int g = std::max(l, 0); g <= std::min(i, j); ++g)
      rhs = mat_add(rhs, mat_scale(binom_q(g, l), build_H(v, i, j, g)));
    return make_result(name, v, params, lhs, rhs, false);
  }

  if (name == "wt_w") {
    const int i = get_param(params, "i"), j = get_param(params, "j"),
              k = get_param(params, "k");
    require(0 <= i && i <= v && 0 <= j && j <= v && 0 <= k && k <= v,
            "need 0 <= i,j,k <= v");
    ExactMatrix lhs = mat_mul(transpose(build_W(v, i, j)), build_W(v, i, k));
    return make_result(name, v, params, lhs, build_C(v, j, k, i), false);
  }

  if (name == "c_w") {
    const int i = get_param(params, "i"), j = get_param(params, "j"),
              k = get_param(params, "k"), l = get_param(params, "l");
    require(0 <= i && i <= v && 0 <= j && j <= v && 0 <= k && k <= v,
            "need 0 <= i,j,k <= v");
    require(0 <= l && l <= std::min(i, j), "need 0 <= l <= min(i,j)");
    ExactMatrix lhs = mat_mul(build_C(v, i, j, l), build_W(v, j, k));
    ExactMatrix rhs = mat_scale(binom_q(k - l, j - l), build_C(v, i, k, l));
    return make_result(name, v, params, lhs, rhs, false);
  }

  if (name == "w_wt") {
    const int i = get_param(params, "i"), j = get_param(params, "j"),
              k = get_param(params, "k");
    require(0 <= i && i <= v && 0 <= j && j <= v && 0 <= k && k <= v,
            "need 0 <= i,j,k <= v");
    require(i + j <= v, "need i + j <= v");
    ExactMatrix lhs = mat_mul(build_W(v, i, k), transpose(build_W(v, j, k)));
    ExactMatrix rhs = ExactMatrix::zero(lhs.rows(), lhs.cols(), lhs.row_tag(),
                                        lhs.col_tag());
    for (int l = std::max(0, i + j - k); l <= std::min(i, j); ++l) {
      Rational coef = binom_q(v - i - j, k - i - j + l);
      if (!is_zero(coef))
        rhs = mat_add(rhs, mat_scale(coef, build_C(v, i, j, l)));
    }
    return make_result(name, v, params, lhs, rhs, false);
  }

  if (name == "w_c" || name == "w_c_printed_bound") {
    const int i = get_param(params, "i"), j = get_param(params, "j"),
              k = get_param(params, "k"), l = get_param(params, "l");
    require(0 <= i && i <= v && 0 <= j && j <= v && 0 <= k && k <= v,
            "need 0 <= i,j,k <= v");
    require(0 <= l && l <= std::min(j, k), "need 0 <= l <= min(j,k)");
    require(l + i <= v, "need l + i <= v");
    ExactMatrix lhs = mat_mul(build_W(v, i, j), build_C(v, j, k, l));
    const bool probe = name == "w_c_printed_bound";
    const int lower =
        probe ? std::max(0, l + j - i) : std::max(0, l + i - j);
    return make_result(name, v, params, lhs, w_c_rhs(v, i, j, k, l, lower),
                       probe);
  }

  if (name == "c_c") {
    const int i = get_param(params, "i"), j = get_param(params, "j"),
              k = get_param(params, "k"), l = get_param(params, "l"),
              s = get_param(params, "s");
    require(0 <= i && i <= v && 0 <= j && j <= v && 0 <= k && k <= v,
            "need 0 <= i,j,k <= v");
    require(0 <= l && l <= std::min(i, j), "need 0 <= l <= min(i,j)");
    require(0 <= s && s <= std::min(j, k), "need 0 <= s <= min(j,k)");
    require(l + s <= v, "need l + s <= v");
    ExactMatrix lhs = mat_mul(build_C(v, i, j, l), build_C(v, j, k, s));
    ExactMatrix rhs = ExactMatrix::zero(lhs.rows(), lhs.cols(), lhs.row_tag(),
                                        lhs.col_tag());
    for (int h = std::max(0, l + s - j); h <= std::min(l, s); ++h) {
      Rational coef = binom_q(v - l - s, j - l - s + h) *
                      binom_q(i - h, l - h) * binom_q(k - h, s - h);
      if (!is_zero(coef))
        rhs = mat_add(rhs, mat_scale(coef, build_C(v, i, k, h)));
    }
    return make_result(name, v, params, lhs, rhs, false);
  }

  if (name == "w_wt_step") {
    const int i = get_param(params, "i"), j = get_param(params, "j");
    require(0 <= i && i + 1 <= v, "need 0 <= i and i + 1 <= v");
    require(0 <= j && j <= i + 1, "need 0 <= j <= i + 1");
    ExactMatrix lhs =
        mat_mul(build_W(v, i, i + 1), transpose(build_W(v, j, i + 1)));
    ExactMatrix rhs =
        mat_add(mat_scale(Rational(v - i - j), build_C(v, i, j, j)),
                build_C(v, i, j, j - 1));
    return make_result(name, v, params, lhs, rhs, false);
  }

  if (name == "w_wt_alt") {
    const int i = get_param(params, "i"), j = get_param(params, "j"),
              k = get_param(params, "k");
    require(0 <= i && i <= v && 0 <= j && j <= v && 0 <= k && k <= v,
            "need 0 <= i,j,k <= v");
    require(i + j <= v, "need i + j <= v");
    ExactMatrix lhs = mat_mul(build_W(v, i, k), transpose(build_W(v, j, k)));
    ExactMatrix rhs = ExactMatrix::zero(lhs.rows(), lhs.cols(), lhs.row_tag(),
                                        lhs.col_tag());
    for (int s = 0; s <= std::min(k - i, j); ++s) {
      Rational coef = binom_q(v - i - j, k - i - s);
      if (!is_zero(coef))
        rhs = mat_add(rhs, mat_scale(coef, build_C(v, i, j, j - s)));
    }
    return make_result(name, v, params, lhs, rhs, false);
  }

  throw std::invalid_argument("verify_identity: unknown identity " + name);
}

std::vector<IdentityResult> sweep_identity(const std::string& name, int v) {
  std::vector<IdentityResult> out;
  auto run = [&](Params params) {
    out.push_back(verify_identity(name, v, std::move(params)));
  };

  if (name == "w_compose") {
    for (int i = 0; i <= v; ++i)
      for (int j = i; j <= v; ++j)
        for (int k = j; k <= v; ++k)
          run({{"i", i}, {"j", j}, {"k", k}});
  } else if (name == "c_as_h_sum") {
    for (int i = 0; i <= v; ++i)
      for (int j = 0; j <= v; ++j)
        for (int l = 0; l <= std::min(i, j); ++l)
          run({{"i", i}, {"j", j}, {"l", l}});
  } else if (name == "wt_w") {
    for (int i = 0; i <= v; ++i)
      for (int j = 0; j <= v; ++j)
        for (int k = 0; k <= v; ++k)
          run({{"i", i}, {"j", j}, {"k", k}});
  } else if (name == "c_w") {
    for (int i = 0; i <= v; ++i)
      for (int j = 0; j <= v; ++j)
        for (int k = 0; k <= v; ++k)
          for (int l = 0; l <= std::min(i, j); ++l)
            run({{"i", i}, {"j", j}, {"k", k}, {"l", l}});
  } else if (name == "w_wt" || name == "w_wt_alt") {
    for (int i = 0; i <= v; ++i)
      for (int j = 0; j + i <= v; ++j)
        for (int k = 0; k <= v; ++k)
          run({{"i", i}, {"j", j}, {"k", k}});
  } else if (name == "w_c" || name == "w_c_printed_bound") {
    for (int i = 0; i <= v; ++i)
      for (int j = 0; j <= v; ++j)
        for (int k = 0; k <= v; ++k)
          for (int l = 0; l <= std::min(j, k) && l + i <= v; ++l)
            run({{"i", i}, {"j", j}, {"k", k}, {"l", l}});
  } else if (name == "c_c") {
    for (int i = 0; i <= v; ++i)
      for (int j = 0; j <= v; ++j)
        for (int k = 0; k <= v; ++k)
          for (int l = 0; l <= std::min(i, j); ++l)
            for (int s = 0; s <= std::min(j, k) && l + s <= v; ++s)
              run({{"i", i}, {"j", j}, {"k", k}, {"l", l}, {"s", s}});
  } else if (name == "w_wt_step") {
    for (int i = 0; i + 1 <= v; ++i)
      for (int j = 0; j <= i + 1; ++j)
        run({{"i", i}, {"j", j}});
  } else {
    throw std::invalid_argument("sweep_identity: unknown identity " + name);
  }
  return out;
}

std::vector<IdentityResult> sweep_all_identities(int v_max) {
  std::vector<IdentityResult> out;
  for (int v = 0; v <= v_max; ++v)
    for (const auto& name : identity_names())
      for (auto& r : sweep_identity(name, v))
        out.push_back(std::move(r));
  return out;
}

}  // namespace twlab
