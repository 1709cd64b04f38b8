#include "finsem/random_gen.hpp"

#include <vector>

namespace finsem {

Formula random_formula(std::mt19937& rng, Fragment fragment, int max_depth,
                       int num_letters) {
  std::vector<Connective> options;
  if (fragment.contains(Connective::And)) options.push_back(Connective::And);
  if (fragment.contains(Connective::Or)) options.push_back(Connective::Or);
  if (fragment.contains(Connective::Implies)) options.push_back(Connective::Implies);
  if (fragment.contains(Connective::Not)) options.push_back(Connective::Not);

  std::uniform_int_distribution<int> letter_dist(1, num_letters);
  if (max_depth <= 0 || options.empty() ||
      std::uniform_int_distribution<int>(0, 3)(rng) == 0)
    return Formula::letter(letter_dist(rng));

  Connective c = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
  switch (c) {
    case Connective::Not:
      return Formula::negate(random_formula(rng, fragment, max_depth - 1, num_letters));
    case Connective::And:
      return Formula::conj(random_formula(rng, fragment, max_depth - 1, num_letters),
                           random_formula(rng, fragment, max_depth - 1, num_letters));
    case Connective::Or:
      return Formula::disj(random_formula(rng, fragment, max_depth - 1, num_letters),
                           random_formula(rng, fragment, max_depth - 1, num_letters));
    case Connective::Implies:
      return Formula::implies(random_formula(rng, fragment, max_depth - 1, num_letters),
                              random_formula(rng, fragment, max_depth - 1, num_letters));
  }
  return Formula::letter(letter_dist(rng));
}

Sequent random_sequent(std::mt19937& rng, Fragment fragment, int max_depth,
                       int num_letters, int max_premises) {
  int n_premises = std::uniform_int_distribution<int>(0, max_premises)(rng);
  Sequent s{{}, random_formula(rng, fragment, max_depth, num_letters)};
  s.premises.reserve(n_premises);
  for (int i = 0; i < n_premises; ++i)
    s.premises.push_back(random_formula(rng, fragment, max_depth, num_letters));
  return s;
}

}  // namespace finsem
