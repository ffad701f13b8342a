#include "reltt/print.hpp"

#include <vector>

namespace reltt {

namespace {

std::string pick(const std::string& hint, const NameSet& avoid, const std::string& fallback) {
  return fresh(hint.empty() ? fallback : hint, avoid);
}

class TermPrinter {
 public:
  explicit TermPrinter(const Term& top) : avoid_(free_vars(top)) {}

  // level 0: anything; 1: application head; 2: argument
  void print(const Term& t, int level, std::string& out) {
    switch (t.kind()) {
      case Term::Kind::Free:
        out += t.name();
        return;
      case Term::Kind::Bound:
        out += env_.at(env_.size() - 1 - t.index());
        return;
      case Term::Kind::Lam: {
        if (level > 0) out += '(';
        std::string name = pick(t.name(), avoid_, "x");
        out += '\\';
        out += name;
        out += ". ";
        env_.push_back(name);
        avoid_.insert(name);
        print(t.body(), 0, out);
        avoid_.erase(name);
        env_.pop_back();
        if (level > 0) out += ')';
        return;
      }
      case Term::Kind::App:
        if (level > 1) out += '(';
        print(t.fn(), 1, out);
        out += ' ';
        print(t.arg(), 2, out);
        if (level > 1) out += ')';
        return;
    }
  }

 private:
  NameSet avoid_;
  std::vector<std::string> env_;
};

class TypePrinter {
 public:
  explicit TypePrinter(const RelType& top) : avoid_(free_type_vars(top)) {}

  // level 0: all/arrow; 1: composition; 2: postfix; 3: atom
  void print(const RelType& r, int level, std::string& out) {
    switch (r.kind()) {
      case RelType::Kind::Var:
        out += r.name();
        return;
      case RelType::Kind::Bound:
        out += env_.at(env_.size() - 1 - r.index());
        return;
      case RelType::Kind::Promote:
        out += '{';
        out += show(r.term());
        out += '}';
        return;
      case RelType::Kind::All: {
        if (level > 0) out += '(';
        std::string name = pick(r.name(), avoid_, "X");
        out += "all ";
        out += name;
        out += ". ";
        env_.push_back(name);
        avoid_.insert(name);
        print(r.body(), 0, out);
        avoid_.erase(name);
        env_.pop_back();
        if (level > 0) out += ')';
        return;
      }
      case RelType::Kind::Arrow:
        if (level > 0) out += '(';
        print(r.left(), 1, out);
        out += " -> ";
        print(r.right(), 0, out);
        if (level > 0) out += ')';
        return;
      case RelType::Kind::Comp:
        if (level > 1) out += '(';
        print(r.left(), 2, out);
        out += " * ";
        print(r.right(), 1, out);
        if (level > 1) out += ')';
        return;
      case RelType::Kind::Conv:
        if (level > 2) out += '(';
        print(r.body(), 2, out);
        out += '^';
        if (level > 2) out += ')';
        return;
    }
  }

 private:
  NameSet avoid_;
  std::vector<std::string> env_;
};

// level 0: binders and conversions; 1: application; 2: atom
void print_proof(const Proof& p, int level, std::string& out) {
  auto open = [&](int own) {
    if (level > own) out += '(';
  };
  auto close = [&](int own) {
    if (level > own) out += ')';
  };
  switch (p.kind()) {
    case Proof::Kind::Var:
      out += p.name();
      return;
    case Proof::Kind::Lam:
      open(0);
      out += "fun (" + p.name() + " : " + p.name2() + " [" + show(p.type()) + "] " + p.name3() +
             ") => ";
      print_proof(p.sub1(), 0, out);
      close(0);
      return;
    case Proof::Kind::App:
      open(1);
      print_proof(p.sub1(), 1, out);
      out += ' ';
      print_proof(p.sub2(), 2, out);
      close(1);
      return;
    case Proof::Kind::TyApp:
      open(1);
      print_proof(p.sub1(), 1, out);
      out += " {" + show(p.type()) + "}";
      close(1);
      return;
    case Proof::Kind::TyLam:
      open(0);
      out += "Fun " + p.name() + " => ";
      print_proof(p.sub1(), 0, out);
      close(0);
      return;
    case Proof::Kind::Conv:
      open(0);
      out += show(p.term1()) + " <| ";
      print_proof(p.sub1(), 0, out);
      out += " |> " + show(p.term2());
      close(0);
      return;
    case Proof::Kind::ConvI:
    case Proof::Kind::ConvE:
      out += p.kind() == Proof::Kind::ConvI ? "conv_i " : "conv_e ";
      print_proof(p.sub1(), 2, out);
      return;
    case Proof::Kind::Iota:
      out += "iota {" + show(p.term1()) + ", " + show(p.term2()) + "}";
      return;
    case Proof::Kind::Rho:
      open(0);
      out += "rho {" + p.name() + ". " + show(p.term1()) + ", " + show(p.term2()) + "} ";
      print_proof(p.sub1(), 1, out);
      out += " - ";
      print_proof(p.sub2(), 0, out);
      close(0);
      return;
    case Proof::Kind::Pair:
      out += '(';
      print_proof(p.sub1(), 0, out);
      out += ", ";
      print_proof(p.sub2(), 0, out);
      out += " via " + show(p.term1()) + ")";
      return;
    case Proof::Kind::Pi:
      open(0);
      out += "pi ";
      print_proof(p.sub1(), 1, out);
      out += " - " + p.name() + " " + p.name2() + " " + p.name3() + ". ";
      print_proof(p.sub2(), 0, out);
      close(0);
      return;
  }
}

}  // namespace

std::string show(const Term& t) {
  std::string out;
  TermPrinter(t).print(t, 0, out);
  return out;
}

std::string show(const RelType& r) {
  std::string out;
  TypePrinter(r).print(r, 0, out);
  return out;
}

std::string show(const Judgment& j) {
  return show(j.left) + " [" + show(j.type) + "] " + show(j.right);
}

std::string show(const Proof& p) {
  std::string out;
  print_proof(p, 0, out);
  return out;
}

std::string show(const Context& g) {
  std::string out = "(";
  bool first = true;
  for (const auto& e : g.entries()) {
    if (!first) out += ", ";
    first = false;
    out += e.proof_var + " : " + show(e.judgment);
  }
  out += ')';
  return out;
}

}  // namespace reltt
