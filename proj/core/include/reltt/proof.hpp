#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "reltt/context.hpp"
#include "reltt/reltype.hpp"
#include "reltt/term.hpp"

namespace reltt {

// Source position of a surface construct; line 0 means "unknown".
struct Span {
  std::size_t line = 0;
  std::size_t col = 0;
  std::size_t begin = 0;
  std::size_t end = 0;
  bool known() const { return line != 0; }
};

// RelTy proof terms. Binders inside proofs are nominal: subject binders of
// fun/pi/rho and type binders of Fun are plain names, and the terms and
// types below them mention those names as free variables. The kernel
// abstracts them when it builds the concluded judgment.
class Proof {
 public:
  enum class Kind : std::uint8_t {
    Var,     // u
    Lam,     // fun (u : x [R] x') => p
    App,     // p p'
    TyApp,   // p {R}
    TyLam,   // Fun X => p
    Conv,    // t1 <| p |> t2
    ConvI,   // conv_i p
    ConvE,   // conv_e p
    Iota,    // iota {t, t'}
    Rho,     // rho {x. t1, t2} p - p'
    Pair,    // (p, p' via t)
    Pi,      // pi p - x u v. p'
  };

  static Proof var(std::string u, Span s = {});
  static Proof lam(std::string u, std::string subj_left, RelType r, std::string subj_right,
                   Proof body, Span s = {});
  static Proof app(Proof fn, Proof arg, Span s = {});
  static Proof ty_app(Proof p, RelType r, Span s = {});
  static Proof ty_lam(std::string tvar, Proof body, Span s = {});
  static Proof conv(Term left, Proof p, Term right, Span s = {});
  static Proof conv_i(Proof p, Span s = {});
  static Proof conv_e(Proof p, Span s = {});
  static Proof iota(Term t, Term t2, Span s = {});
  static Proof rho(std::string x, Term t1, Term t2, Proof eq, Proof body, Span s = {});
  static Proof pair(Proof p, Proof p2, Term mid, Span s = {});
  static Proof pi(Proof scrutinee, std::string x, std::string u, std::string v, Proof body,
                  Span s = {});

  Kind kind() const;
  const Span& span() const;
  Proof at(Span s) const;

  // Var: u. Lam: u. TyLam: X. Rho: x. Pi: x.
  const std::string& name() const;
  // Lam: left subject binder. Pi: u.
  const std::string& name2() const;
  // Lam: right subject binder. Pi: v.
  const std::string& name3() const;
  // Conv: left. Iota: t. Rho: t1. Pair: mid.
  const Term& term1() const;
  // Conv: right. Iota: t'. Rho: t2.
  const Term& term2() const;
  // Lam: domain. TyApp: instantiation.
  const RelType& type() const;
  // Lam/TyLam/ConvI/ConvE body, App fn, TyApp/Conv inner, Rho eq, Pair left, Pi scrutinee.
  const Proof& sub1() const;
  // App arg, Rho body, Pair right, Pi body.
  const Proof& sub2() const;

  std::size_t size() const;

 private:
  struct Node;
  friend struct ProofFactory;
  explicit Proof(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;

 public:
  using NodeType = Node;
};

struct Proof::Node {
  Kind kind;
  Span span;
  std::string name;
  std::string name2;
  std::string name3;
  std::optional<Term> term1;
  std::optional<Term> term2;
  std::optional<RelType> type;
  std::optional<Proof> sub1;
  std::optional<Proof> sub2;
  std::size_t size = 1;
};

// Structural equality ignoring spans. Binder names must match exactly.
bool same_proof(const Proof& a, const Proof& b);

// Capture-free renaming of one free name of each sort. Stops at binders of
// the same name. `to` must not be bound anywhere in p.
Proof rename_free_proof_var(const Proof& p, const std::string& from, const std::string& to);
Proof rename_free_term_var(const Proof& p, const std::string& from, const std::string& to);
Proof rename_free_type_var(const Proof& p, const std::string& from, const std::string& to);

// Renames every binder of p (proof variables, subject binders, type
// variables) to a name fresh for `avoid` and for the proof itself, using
// `tag` as the base. The result proves an alpha-equal judgment.
Proof refresh_binders(const Proof& p, const NameSet& avoid, const std::string& tag);

// Proof variables free in p.
NameSet free_proof_vars(const Proof& p);
// Every name of each sort the proof mentions, bound or free.
void collect_proof_names(const Proof& p, NameSet& proof_vars, NameSet& term_names,
                         NameSet& type_names);

}  // namespace reltt
