#include "superrr/suites.hpp"

#include <sstream>

namespace superrr::suites {

namespace {

std::vector<Rational> as_rationals(const std::vector<long>& v) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (long x : v) out.emplace_back(x);
  return out;
}

std::string list_to_string(const std::vector<long>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "]";
  return os.str();
}

long uniform(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

std::vector<long> random_degrees(std::mt19937_64& rng, long count, long max_abs) {
  std::vector<long> out;
  for (long i = 0; i < count; ++i) out.push_back(uniform(rng, -max_abs, max_abs));
  return out;
}

// All single-step simplifications of a degree vector.
void vector_candidates(const std::vector<long>& v, const std::function<void(std::vector<long>)>& emit) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto removed = v;
    removed.erase(removed.begin() + static_cast<long>(i));
    emit(std::move(removed));
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    auto zeroed = v;
    zeroed[i] = 0;
    emit(zeroed);
    auto halved = v;
    halved[i] /= 2;
    if (halved[i] != 0) emit(halved);
    auto stepped = v;
    stepped[i] += v[i] > 0 ? -1 : 1;
    emit(stepped);
  }
}

std::vector<Case> candidates(const Case& c) {
  std::vector<Case> out;
  vector_candidates(c.first.even, [&](std::vector<long> v) {
    Case n = c;
    n.first.even = std::move(v);
    out.push_back(std::move(n));
  });
  vector_candidates(c.first.odd, [&](std::vector<long> v) {
    Case n = c;
    n.first.odd = std::move(v);
    out.push_back(std::move(n));
  });
  vector_candidates(c.second.even, [&](std::vector<long> v) {
    Case n = c;
    n.second.even = std::move(v);
    out.push_back(std::move(n));
  });
  vector_candidates(c.second.odd, [&](std::vector<long> v) {
    Case n = c;
    n.second.odd = std::move(v);
    out.push_back(std::move(n));
  });
  vector_candidates(c.normal, [&](std::vector<long> v) {
    Case n = c;
    n.normal = std::move(v);
    out.push_back(std::move(n));
  });
  if (c.deg_L != 0) {
    Case n = c;
    n.deg_L = 0;
    out.push_back(n);
    n.deg_L = c.deg_L + (c.deg_L > 0 ? -1 : 1);
    out.push_back(n);
  }
  if (c.model.kind() == ChowModel::Kind::curve && c.model.genus() > 0) {
    Case n = c;
    n.model = ChowModel::curve(c.model.genus() - 1);
    out.push_back(n);
  }
  if (c.model.kind() == ChowModel::Kind::proj_space && c.model.dimension() > 1) {
    Case n = c;
    n.model = ChowModel::proj_space(c.model.dimension() - 1);
    out.push_back(n);
  }
  return out;
}

bool fails(const Predicate& pred, const Case& c) {
  try {
    return !pred(c);
  } catch (const std::exception&) {
    return true;
  }
}

}  // namespace

SuperBundle Case::bundle_first() const {
  return SuperBundle::from_degrees(model, as_rationals(first.even), as_rationals(first.odd));
}

SuperBundle Case::bundle_second() const {
  return SuperBundle::from_degrees(model, as_rationals(second.even), as_rationals(second.odd));
}

NormalData Case::normal_data() const { return NormalData::from_degrees(model, as_rationals(normal)); }

std::string Case::to_string() const {
  std::ostringstream os;
  os << "model " << model.to_string() << "; E even " << list_to_string(first.even) << " odd "
     << list_to_string(first.odd) << "; F even " << list_to_string(second.even) << " odd "
     << list_to_string(second.odd) << "; N* roots " << list_to_string(normal) << "; deg L " << deg_L;
  return os.str();
}

std::string SuiteResult::summary() const {
  return name + ": " + std::to_string(passed) + "/" + std::to_string(cases) + " pass";
}

Case Generator::operator()(std::mt19937_64& rng) const {
  Case c;
  const long pick = curves_only ? 0 : uniform(rng, 0, 9);
  if (pick < 5) {
    c.model = ChowModel::curve(uniform(rng, 0, max_genus));
  } else if (pick < 9) {
    c.model = ChowModel::proj_space(uniform(rng, 1, max_proj_dim));
  } else {
    c.model = ChowModel::point();
  }
  // Degree-one classes on a point are zero.
  const long max_abs = c.model.kind() == ChowModel::Kind::point ? 0 : max_abs_degree;
  c.first.even = random_degrees(rng, uniform(rng, 0, max_even_rank), max_abs);
  c.first.odd = random_degrees(rng, uniform(rng, 0, max_odd_rank), max_abs);
  c.second.even = random_degrees(rng, uniform(rng, 0, max_even_rank), max_abs);
  c.second.odd = random_degrees(rng, uniform(rng, 0, max_odd_rank), max_abs);
  c.normal = random_degrees(rng, uniform(rng, 0, max_odd_rank), max_abs);
  c.deg_L = uniform(rng, -max_abs, max_abs);
  return c;
}

Case shrink(Case c, const Predicate& pred) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (auto& cand : candidates(c)) {
      if (fails(pred, cand)) {
        c = std::move(cand);
        progress = true;
        break;
      }
    }
  }
  return c;
}

SuiteResult run_property(const std::string& name, const Generator& gen, const Predicate& pred, std::uint64_t seed,
                         long cases) {
  std::mt19937_64 rng(seed);
  SuiteResult result{name, cases, 0, std::nullopt, {}};
  for (long i = 0; i < cases; ++i) {
    const Case c = gen(rng);
    if (!fails(pred, c)) {
      ++result.passed;
    } else if (!result.counterexample) {
      result.counterexample = shrink(c, pred);
    }
  }
  return result;
}

SuiteResult run_grr_suite(std::uint64_t seed, long cases) {
  Generator gen;
  gen.curves_only = true;
  auto result = run_property(
      "super GRR (chi_super == componentwise RR)", gen,
      [](const Case& c) {
        const SplitSupercurve curve(c.model.genus(), Rational(c.deg_L));
        return check_sgrr(curve, c.bundle_first());
      },
      seed, cases);
  if (result.counterexample) {
    const auto& c = *result.counterexample;
    const SplitSupercurve curve(c.model.genus(), Rational(c.deg_L));
    result.detail = "chi_super = " + chi_super(curve, c.bundle_first()).to_string() +
                    ", rr_oracle = " + rr_oracle(curve, c.bundle_first()).to_string();
  }
  return result;
}

std::vector<SuiteResult> run_identity_suites(std::uint64_t seed, long cases) {
  const Generator gen;
  std::vector<std::pair<std::string, Predicate>> props;

  props.emplace_back("Whitney c(E+F) = c(E)c(F)", [](const Case& c) {
    const auto e = c.bundle_first();
    const auto f = c.bundle_second();
    return chern_total(direct_sum(e, f)) == chern_total(e) * chern_total(f);
  });
  props.emplace_back("ch(E+F) = ch(E) + ch(F)", [](const Case& c) {
    const auto e = c.bundle_first();
    const auto f = c.bundle_second();
    return chern_character(direct_sum(e, f)) == chern_character(e) + chern_character(f);
  });
  props.emplace_back("ch(E(x)F) = ch(E)ch(F)", [](const Case& c) {
    const auto e = c.bundle_first();
    const auto f = c.bundle_second();
    return chern_character(tensor(e, f)) == chern_character(e) * chern_character(f);
  });
  props.emplace_back("ch(Pi E) = -Pi ch(E)", [](const Case& c) {
    const auto e = c.bundle_first();
    return chern_character(pi_shift(e)) == -SuperScalar::pi() * chern_character(e);
  });
  props.emplace_back("c1(Pi E) = -c1(E) Pi^(r+s)", [](const Case& c) {
    const auto e = c.bundle_first();
    const auto sign = SuperScalar::pi_power(e.even_rank() + e.odd_rank());
    return chern_first(pi_shift(e)) == -(chern_first(e) * sign);
  });
  props.emplace_back("c1(L*) = -c1(L)", [](const Case& c) {
    const ChowModel& m = c.model;
    const long d = c.first.even.empty() ? 0 : c.first.even.front();
    const long e = c.first.odd.empty() ? 0 : c.first.odd.front();
    const auto even_line = SuperBundle::even_line(m, Rational(d));
    const auto odd_line = SuperBundle::odd_line(m, Rational(e));
    return chern_first(dual(even_line)) == -chern_first(even_line) &&
           chern_first(dual(odd_line)) == -chern_first(odd_line);
  });
  props.emplace_back("td(E+F) = td(E)td(F)", [](const Case& c) {
    const auto e = c.bundle_first();
    const auto f = c.bundle_second();
    return todd(direct_sum(e, f)) == todd(e) * todd(f);
  });
  props.emplace_back("td(E) = ch sigma1(E*) for E of rank 0|s", [](const Case& c) {
    const SuperBundle e = SuperBundle::from_degrees(c.model, {}, as_rationals(c.first.odd));
    return todd(e) == sigma1(dual(e));
  });
  props.emplace_back("j(x) * j(y) = j(xy)", [](const Case& c) {
    const auto nd = c.normal_data();
    const auto x = KClass::of(c.bundle_first());
    const auto y = KClass::of(c.bundle_second());
    return star_product(j_map(x, nd), j_map(y, nd), nd) == j_map(x * y, nd);
  });
  props.emplace_back("ch^S(x * y) = ch^S(x) ch^S(y)", [](const Case& c) {
    const auto nd = c.normal_data();
    const auto x = KClass::of(c.bundle_first());
    const auto y = KClass::of(c.bundle_second());
    return ch_twisted(star_product(x, y, nd), nd) == ch_twisted(x, nd) * ch_twisted(y, nd);
  });
  props.emplace_back("x * sigma1(N*) = x", [](const Case& c) {
    const auto nd = c.normal_data();
    const auto x = KClass::of(c.bundle_first());
    return star_product(x, KClass(sigma1_normal(nd)), nd) == x;
  });
  props.emplace_back("ch^S(j(x)) = ch(x)", [](const Case& c) {
    const auto nd = c.normal_data();
    const auto x = KClass::of(c.bundle_first());
    return ch_twisted(j_map(x, nd), nd) == x.ch();
  });
  props.emplace_back("ch^S(i_! x) = i_*(ch(x) td(-N))", [](const Case& c) {
    const auto nd = c.normal_data();
    const auto x = KClass::of(c.bundle_first());
    return ch_twisted(x, nd) == embedding_riemann_roch(x, nd);
  });

  std::vector<SuiteResult> results;
  std::uint64_t stream = 0;
  for (const auto& [name, pred] : props) {
    // Each property draws from its own seeded stream.
    results.push_back(run_property(name, gen, pred, seed + 0x9e3779b97f4a7c15ULL * ++stream, cases));
  }
  return results;
}

}  // namespace superrr::suites
