#include "trivalent/probability.hpp"

#include <json.hpp>

#include <algorithm>
#include <random>
#include <sstream>
#include <utility>

namespace trivalent {

std::string rational_to_string(const Rational& q) {
  return q.get_str();
}

Rational rational_from_string(std::string_view text) {
  std::string s(text);
  if (s.empty() || s.find_first_not_of("0123456789/-") != std::string::npos)
    throw Error("malformed rational: '" + s + "'");
  mpq_class q;
  if (q.set_str(s, 10) != 0 || (s.find('/') != std::string::npos &&
                                mpz_sgn(q.get_den().get_mpz_t()) == 0))
    throw Error("malformed rational: '" + s + "'");
  q.canonicalize();
  return q;
}

Credence::Credence(ValuationSpace space, std::vector<Rational> weights)
    : space_(std::move(space)), weights_(std::move(weights)) {
  if (weights_.size() != space_.size())
    throw Error("credence needs one weight per world");
  Rational sum = 0;
  for (auto& w : weights_) {
    w.canonicalize();  // gmp's mpq layer assumes canonical form
    if (w < 0) throw Error("credence weights must be nonnegative");
    sum += w;
  }
  if (sum != 1) throw Error("credence weights must sum to exactly 1, got " +
                            rational_to_string(sum));
}

Credence Credence::point_mass(ValuationSpace space, std::size_t world_index) {
  std::vector<Rational> weights(space.size(), Rational(0));
  weights.at(world_index) = 1;
  return Credence(std::move(space), std::move(weights));
}

Credence Credence::two_world(ValuationSpace space, std::size_t first,
                             std::size_t second) {
  if (first == second) return point_mass(std::move(space), first);
  std::vector<Rational> weights(space.size(), Rational(0));
  weights.at(first) = Rational(1, 2);
  weights.at(second) = Rational(1, 2);
  return Credence(std::move(space), std::move(weights));
}

Credence Credence::uniform(ValuationSpace space) {
  std::vector<Rational> weights(space.size(),
                                Rational(1, static_cast<long>(space.size())));
  return Credence(std::move(space), std::move(weights));
}

namespace {

Tv tv_from_string(std::string_view s) {
  if (s == "0") return Tv::False;
  if (s == "1/2") return Tv::Half;
  if (s == "1") return Tv::True;
  throw Error("bad truth value '" + std::string(s) + "' (use 0, 1/2 or 1)");
}

std::string trim(std::string s) {
  auto notspace = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
  s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
  return s;
}

std::size_t world_index_from_key(const ValuationSpace& space,
                                 const std::string& key) {
  const AtomNames& names = space.names();
  std::vector<Tv> values(names.size(), Tv::False);
  std::vector<bool> seen(names.size(), false);
  std::stringstream ss(key);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    piece = trim(piece);
    auto eq = piece.find('=');
    if (eq == std::string::npos)
      throw Error("bad world key '" + key + "': missing '='");
    std::string name = trim(piece.substr(0, eq));
    Tv value = tv_from_string(trim(piece.substr(eq + 1)));
    auto it = std::lower_bound(names.begin(), names.end(), name);
    if (it == names.end() || *it != name)
      throw Error("world key '" + key + "' mentions unknown atom '" + name +
                  "'");
    std::size_t idx = static_cast<std::size_t>(it - names.begin());
    if (seen[idx])
      throw Error("world key '" + key + "' repeats atom '" + name + "'");
    seen[idx] = true;
    values[idx] = value;
  }
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!seen[i])
      throw Error("world key '" + key + "' misses atom '" + names[i] + "'");
  return space.index_of(
      Valuation(space.shared_names(), std::move(values), space.mode()));
}

}  // namespace

Credence Credence::from_json_text(std::string_view text,
                                  const EnumerationLimits& limits) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed credence JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("atoms") || !j.contains("mode") ||
      !j.contains("weights"))
    throw Error("credence JSON needs \"atoms\", \"mode\" and \"weights\"");
  AtomNames names;
  for (const auto& a : j.at("atoms")) names.push_back(a.get<std::string>());
  std::string mode_name = j.at("mode").get<std::string>();
  Mode mode;
  if (mode_name == "trivalent")
    mode = Mode::Trivalent;
  else if (mode_name == "bivalent")
    mode = Mode::Bivalent;
  else
    throw Error("credence mode must be \"trivalent\" or \"bivalent\"");
  ValuationSpace space(std::move(names), mode, limits);
  std::vector<Rational> weights(space.size(), Rational(0));
  for (const auto& [key, value] : j.at("weights").items()) {
    std::size_t idx = world_index_from_key(space, key);
    weights[idx] = rational_from_string(value.get<std::string>());
  }
  return Credence(std::move(space), std::move(weights));
}

std::string Credence::to_json_text() const {
  nlohmann::ordered_json j;
  j["atoms"] = space_.names();
  j["mode"] = to_string(space_.mode());
  nlohmann::ordered_json weights = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < weights_.size(); ++i)
    if (weights_[i] != 0)
      weights[space_.at(i).key()] = rational_to_string(weights_[i]);
  j["weights"] = std::move(weights);
  return j.dump();
}

TruthPartition partition(const Formula& f, const Credence& cr,
                         const SemanticsConfig& cfg) {
  const AtomNames& have = cr.space().names();
  for (const auto& a : atoms(f))
    if (!std::binary_search(have.begin(), have.end(), a))
      throw Error("unassigned atom: '" + a + "' is not in the credence's "
                  "atom set");
  TruthPartition out{0, 0, 0};
  for (std::size_t i = 0; i < cr.space().size(); ++i) {
    const Rational& w = cr.weight(i);
    if (w == 0) continue;
    switch (eval(f, cr.space().at(i), cfg)) {
      case Tv::True: out.true_mass += w; break;
      case Tv::Half: out.indeterminate_mass += w; break;
      case Tv::False: out.false_mass += w; break;
    }
  }
  return out;
}

Rational probability(const Formula& f, const Credence& cr,
                     const SemanticsConfig& cfg) {
  TruthPartition tp = partition(f, cr, cfg);
  Rational classical = tp.true_mass + tp.false_mass;
  if (classical == 0) return 1;
  return tp.true_mass / classical;
}

DecimalOdds decimal_odds(const Formula& f, const Credence& cr,
                         const SemanticsConfig& cfg) {
  TruthPartition tp = partition(f, cr, cfg);
  if (tp.true_mass == 0 && tp.false_mass == 0)
    throw Error("decimal odds undefined: '" + render(f) +
                "' is indeterminate everywhere");
  if (tp.true_mass == 0) return {true, Rational(0)};
  return {false, (tp.true_mass + tp.false_mass) / tp.true_mass};
}

Rational conditional_probability(const Formula& c_given, const Formula& given,
                                 const Credence& cr) {
  if (!is_conditional_free(c_given) || !is_conditional_free(given))
    throw Error("conditional probability is defined for conditional-free "
                "formulas only");
  if (cr.space().mode() != Mode::Bivalent)
    throw Error("conditional probability needs a bivalent credence");
  SemanticsConfig cfg;
  Rational given_mass = partition(given, cr, cfg).true_mass;
  if (given_mass == 0)
    throw Error("conditioning on '" + render(given) +
                "', which has probability 0");
  FormulaPtr both = conj(std::make_shared<Formula>(given),
                         std::make_shared<Formula>(c_given));
  return partition(*both, cr, cfg).true_mass / given_mass;
}

Rational check_adams(const Formula& a, const Formula& c, const Credence& cr,
                     const SemanticsConfig& cfg) {
  FormulaPtr conditional = cond(std::make_shared<Formula>(a),
                                std::make_shared<Formula>(c));
  return probability(*conditional, cr, cfg) -
         conditional_probability(c, a, cr);
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::size_t bounded(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

}  // namespace

Credence random_credence(const AtomNames& atom_set, Mode mode,
                         std::uint64_t seed, unsigned denominator_bound,
                         const EnumerationLimits& limits) {
  if (denominator_bound < 1) throw Error("denominator bound must be >= 1");
  ValuationSpace space(atom_set, mode, limits);
  std::mt19937_64 rng(seed);
  if (bounded(rng, 10) == 0)
    return Credence::point_mass(std::move(space), bounded(rng, space.size()));

  unsigned denominator = 1 + static_cast<unsigned>(bounded(rng, denominator_bound));
  // Stars and bars: cut [0, D] at size-1 sorted points; the gaps are the
  // weight numerators.
  std::vector<unsigned> cuts;
  cuts.reserve(space.size() + 1);
  cuts.push_back(0);
  for (std::size_t i = 0; i + 1 < space.size(); ++i)
    cuts.push_back(static_cast<unsigned>(bounded(rng, denominator + 1)));
  cuts.push_back(denominator);
  std::sort(cuts.begin(), cuts.end());
  std::vector<Rational> weights;
  weights.reserve(space.size());
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Rational w(cuts[i + 1] - cuts[i], denominator);
    w.canonicalize();
    weights.push_back(std::move(w));
  }
  return Credence(std::move(space), std::move(weights));
}

std::optional<ProbabilisticCountermodel> search_probabilistic_countermodel(
    const Sequent& s, const SemanticsConfig& cfg, std::size_t budget,
    std::uint64_t seed, const ConsequenceLimits& limits) {
  if (budget < 1) throw Error("search budget must be >= 1");
  AtomNames names = atoms(s.premises);
  for (auto& a : atoms(*s.conclusion)) names.push_back(a);
  ValuationSpace space(std::move(names), Mode::Trivalent, limits.enumeration);

  std::vector<Tv> conclusion_values(space.size());
  for (std::size_t i = 0; i < space.size(); ++i)
    conclusion_values[i] = eval(*s.conclusion, space.at(i), cfg);
  std::optional<std::size_t> conclusion_false_world;
  for (std::size_t i = 0; i < space.size(); ++i)
    if (conclusion_values[i] == Tv::False) {
      conclusion_false_world = i;
      break;
    }

  auto outcomes = u_subset_outcomes(s, cfg, Mode::Trivalent, limits);
  ProbabilisticCountermodel result;
  for (std::size_t ordinal = 0; ordinal < outcomes.size(); ++ordinal) {
    const auto& outcome = outcomes[ordinal];
    FormulaPtr premise = subset_conjunction(s, outcome.subset);
    std::optional<Credence> found;
    if (outcome.countermodel) {
      // Structured families: a point mass handles the cases
      // (1,0) and (1/2,0); (1,1/2) pairs the witness with a world falsifying
      // the conclusion.
      std::size_t w = space.index_of(*outcome.countermodel);
      Tv vp = eval(*premise, *outcome.countermodel, cfg);
      Tv vb = conclusion_values[w];
      if (vb == Tv::False)
        found = Credence::point_mass(space, w);
      else if (vp == Tv::True && vb == Tv::Half && conclusion_false_world)
        found = Credence::two_world(space, w, *conclusion_false_world);
    }
    if (!found) {
      for (std::size_t t = 0; t < budget; ++t) {
        Credence candidate = random_credence(
            space.names(), Mode::Trivalent, mix_seed(seed, ordinal * budget + t),
            16, limits.enumeration);
        if (probability(*premise, candidate, cfg) >
            probability(*s.conclusion, candidate, cfg)) {
          found = std::move(candidate);
          break;
        }
      }
    }
    if (!found) return std::nullopt;
    Rational pp = probability(*premise, *found, cfg);
    Rational pc = probability(*s.conclusion, *found, cfg);
    if (!(pc < pp))
      throw Error("internal: certificate fails its own inequality");
    result.certificates.push_back({outcome.subset, std::move(premise),
                                   std::move(*found), std::move(pp),
                                   std::move(pc)});
  }
  return result;
}

McGeeReport mcgee_demo(const std::array<Rational, 3>& weights) {
  Rational reagan = weights[0];
  Rational carter = weights[1];
  Rational anderson = weights[2];
  reagan.canonicalize();
  carter.canonicalize();
  anderson.canonicalize();
  if (reagan <= 0 || carter <= 0 || anderson <= 0)
    throw Error("election weights must all be positive");
  if (reagan + carter + anderson != 1)
    throw Error("election weights must sum to 1");

  // Atoms sorted as [n, r]; world index is n*2 + r.
  ValuationSpace space({"n", "r"}, Mode::Bivalent);
  std::vector<Rational> w(4, Rational(0));
  w[0] = carter;    // n=0, r=0
  w[1] = reagan;    // n=0, r=1
  w[2] = anderson;  // n=1, r=0
  Credence cr(space, std::move(w));

  SemanticsConfig cfg;
  FormulaPtr major = parse("(r | n) -> (~r -> n)");
  FormulaPtr minor = parse("r | n");
  FormulaPtr conclusion = parse("~r -> n");

  McGeeReport report{cr,
                     probability(*major, cr, cfg),
                     probability(*minor, cr, cfg),
                     probability(*conclusion, cr, cfg),
                     false,
                     false};

  // Law of Total Probability, Eq. form p(b) = p(b|a)p(a) + p(b|~a)(1-p(a)),
  // here with a := r and b := n.
  FormulaPtr r = parse("r");
  FormulaPtr n = parse("n");
  Rational p_r = probability(*r, cr, cfg);
  Rational lhs1 = probability(*n, cr, cfg);
  Rational rhs1 = conditional_probability(*n, *r, cr) * p_r +
                  conditional_probability(*n, *parse("~r"), cr) * (1 - p_r);
  report.total_probability_exact = (lhs1 == rhs1);

  // Conditional decomposition
  //   p(C|B) = p(C|A&B) p(A|B) + p(C|~A&B) (1 - p(A|B))
  // with A := r | n, B := ~r, C := n.
  Rational p_c_given_b = conditional_probability(*n, *parse("~r"), cr);
  Rational p_a_given_b =
      conditional_probability(*minor, *parse("~r"), cr);
  Rational p_c_given_ab =
      conditional_probability(*n, *parse("(r | n) & ~r"), cr);
  Rational p_c_given_nab =
      conditional_probability(*n, *parse("~(r | n) & ~r"), cr);
  Rational rhs2 =
      p_c_given_ab * p_a_given_b + p_c_given_nab * (1 - p_a_given_b);
  report.nested_decomposition_exact = (p_c_given_b == rhs2);
  return report;
}

TrivialityReport triviality_witness(std::uint64_t seed,
                                    std::size_t preservation_checks) {
  // Atoms sorted as [a, c]; world index is a*2 + c.
  ValuationSpace space({"a", "c"}, Mode::Bivalent);
  std::vector<Rational> w(4);
  w[0] = Rational(1, 10);  // a=0, c=0
  w[1] = Rational(7, 10);  // a=0, c=1
  w[2] = Rational(1, 10);  // a=1, c=0
  w[3] = Rational(1, 10);  // a=1, c=1
  Credence cr(space, std::move(w));

  SemanticsConfig cfg;
  TrivialityReport report{cr,
                          probability(*parse("a -> c"), cr, cfg),
                          probability(*parse("c"), cr, cfg),
                          probability(*parse("a & c"), cr, cfg),
                          probability(*parse("a & ~c"), cr, cfg),
                          preservation_checks,
                          true};

  // Preservation Condition: p(a) > 0 and p(c) = 0 force p(a -> c) = 0.
  // Sample credences supported on the c=0 worlds with positive mass on a=1.
  FormulaPtr conditional = parse("a -> c");
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < preservation_checks; ++k) {
    unsigned denominator = 1 + static_cast<unsigned>(rng() % 1000);
    unsigned on_a = 1 + static_cast<unsigned>(rng() % denominator);
    std::vector<Rational> pw(4, Rational(0));
    pw[2] = Rational(on_a, denominator);                // a=1, c=0
    pw[0] = Rational(denominator - on_a, denominator);  // a=0, c=0
    pw[2].canonicalize();
    pw[0].canonicalize();
    Credence sample(space, std::move(pw));
    if (probability(*parse("a"), sample, cfg) <= 0 ||
        probability(*parse("c"), sample, cfg) != 0 ||
        probability(*conditional, sample, cfg) != 0) {
      report.preservation_holds = false;
      break;
    }
  }
  return report;
}

}  // namespace trivalent
