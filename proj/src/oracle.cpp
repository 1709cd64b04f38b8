#include "finsem/oracle.hpp"

#include <memory>
#include <set>
#include <vector>

namespace finsem {

namespace {

// Internal formulas extend the language with falsum; ~A enters as
// A -> falsum and falsum never leaves this translation unit.
struct IF;
using IFp = std::shared_ptr<const IF>;

struct IF {
  enum Kind { Falsum, Atom, And, Or, Imp } kind;
  int atom = 0;
  IFp a, b;
};

IFp mk(IF::Kind k, IFp a = nullptr, IFp b = nullptr) {
  auto n = std::make_shared<IF>();
  n->kind = k;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

IFp mk_atom(int index) {
  auto n = std::make_shared<IF>();
  n->kind = IF::Atom;
  n->atom = index;
  return n;
}

IFp translate(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Letter:
      return mk_atom(f.letter_index());
    case Formula::Kind::Not:
      return mk(IF::Imp, translate(f.child()), mk(IF::Falsum));
    case Formula::Kind::And:
      return mk(IF::And, translate(f.left()), translate(f.right()));
    case Formula::Kind::Or:
      return mk(IF::Or, translate(f.left()), translate(f.right()));
    case Formula::Kind::Implies:
      return mk(IF::Imp, translate(f.left()), translate(f.right()));
  }
  throw domain_error("malformed formula node");
}

// Contraction-free sequent search in the style of Dyckhoff's LJT: the
// four antecedent shapes of a left implication get their own rules, so
// no contraction rule and no loop checking is needed.
class Prover {
 public:
  explicit Prover(std::uint64_t budget) : budget_(budget) {}

  bool prove(std::vector<IFp> ctx, std::set<int> atoms, IFp goal) {
    if (budget_ == 0)
      throw resource_limit_error("proof-search budget exhausted");
    --budget_;

    // invertible right rules
    while (true) {
      if (goal->kind == IF::And)
        return prove(ctx, atoms, goal->a) && prove(std::move(ctx), std::move(atoms), goal->b);
      if (goal->kind == IF::Imp) {
        if (add(ctx, atoms, goal->a)) return true;
        goal = goal->b;
        continue;
      }
      break;
    }

    // saturate non-branching left rules
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < ctx.size(); ++i) {
        const IFp& f = ctx[i];
        if (f->kind == IF::And) {
          IFp a = f->a, b = f->b;
          erase_at(ctx, i);
          if (add(ctx, atoms, a) || add(ctx, atoms, b)) return true;
          changed = true;
          break;
        }
        if (f->kind == IF::Imp) {
          const IFp ant = f->a;
          if (ant->kind == IF::Falsum) {
            erase_at(ctx, i);  // falsum -> B carries no information
            changed = true;
            break;
          }
          if (ant->kind == IF::Atom && atoms.count(ant->atom)) {
            IFp b = f->b;
            erase_at(ctx, i);
            if (add(ctx, atoms, b)) return true;
            changed = true;
            break;
          }
          if (ant->kind == IF::And) {
            // (C & D) -> B  ~~>  C -> (D -> B)
            IFp b = f->b;
            ctx[i] = mk(IF::Imp, ant->a, mk(IF::Imp, ant->b, b));
            changed = true;
            break;
          }
          if (ant->kind == IF::Or) {
            // (C | D) -> B  ~~>  C -> B, D -> B
            IFp b = f->b;
            ctx[i] = mk(IF::Imp, ant->a, b);
            ctx.push_back(mk(IF::Imp, ant->b, b));
            changed = true;
            break;
          }
        }
      }
    }

    if (goal->kind == IF::Atom && atoms.count(goal->atom)) return true;

    // invertible branching: left disjunction
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      if (ctx[i]->kind != IF::Or) continue;
      IFp a = ctx[i]->a, b = ctx[i]->b;
      std::vector<IFp> left_ctx = ctx;
      erase_at(left_ctx, i);
      std::vector<IFp> right_ctx = left_ctx;
      std::set<int> left_atoms = atoms, right_atoms = atoms;
      bool ok = add(left_ctx, left_atoms, a) ||
                prove(std::move(left_ctx), std::move(left_atoms), goal);
      if (!ok) return false;
      return add(right_ctx, right_atoms, b) ||
             prove(std::move(right_ctx), std::move(right_atoms), goal);
    }

    // choice points: right disjunction, then nested implications
    if (goal->kind == IF::Or) {
      if (prove(ctx, atoms, goal->a)) return true;
      if (prove(ctx, atoms, goal->b)) return true;
    }
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      const IFp& f = ctx[i];
      if (f->kind != IF::Imp || f->a->kind != IF::Imp) continue;
      IFp c = f->a->a, d = f->a->b, b = f->b;
      std::vector<IFp> premise_ctx = ctx;
      erase_at(premise_ctx, i);
      std::vector<IFp> conclusion_ctx = premise_ctx;
      premise_ctx.push_back(mk(IF::Imp, d, b));
      std::set<int> premise_atoms = atoms, conclusion_atoms = atoms;
      if (!prove(std::move(premise_ctx), std::move(premise_atoms), mk(IF::Imp, c, d)))
        continue;
      if (add(conclusion_ctx, conclusion_atoms, b)) return true;
      if (prove(std::move(conclusion_ctx), std::move(conclusion_atoms), goal)) return true;
    }
    return false;
  }

 private:
  // Files f into the context; returns true if the sequent is already
  // proved (falsum on the left).
  static bool add(std::vector<IFp>& ctx, std::set<int>& atoms, const IFp& f) {
    if (f->kind == IF::Falsum) return true;
    if (f->kind == IF::Atom) {
      atoms.insert(f->atom);
      return false;
    }
    ctx.push_back(f);
    return false;
  }

  static void erase_at(std::vector<IFp>& ctx, std::size_t i) {
    ctx.erase(ctx.begin() + static_cast<std::ptrdiff_t>(i));
  }

  std::uint64_t budget_;
};

}  // namespace

Verdict prove_ipc(const Sequent& s, std::uint64_t budget) {
  Prover prover(budget);
  std::vector<IFp> ctx;
  std::set<int> atoms;
  for (const Formula& p : s.premises) {
    if (p.kind() == Formula::Kind::Letter) atoms.insert(p.letter_index());
    else ctx.push_back(translate(p));
  }
  Verdict v;
  v.method = "oracle";
  v.derivable = prover.prove(std::move(ctx), std::move(atoms), translate(s.conclusion));
  return v;
}

DisjunctionPropertyReport check_disjunction_property(const Formula& f, std::uint64_t budget) {
  if (f.kind() != Formula::Kind::Or)
    throw domain_error("check_disjunction_property expects a disjunction");
  if (!prove_ipc({{}, f}, budget).derivable)
    throw domain_error("check_disjunction_property expects a derivable disjunction");
  DisjunctionPropertyReport report;
  report.left_derivable = prove_ipc({{}, f.left()}, budget).derivable;
  report.right_derivable = prove_ipc({{}, f.right()}, budget).derivable;
  if (!report.left_derivable && !report.right_derivable)
    throw domain_error("disjunction property violated: neither disjunct is derivable");
  return report;
}

}  // namespace finsem
