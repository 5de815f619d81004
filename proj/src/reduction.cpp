#include <fltl/error.hpp>
#include <fltl/reduction.hpp>

#include <algorithm>
#include <stdexcept>

namespace fltl::reduction {

using minsky::MinskyMachine;
using minsky::Operation;

const std::vector<Letter>& reserved_letters()
{
    static const std::vector<Letter> letters{kA, kB, kAHat, kBHat, kSep0, kSep1, kSepZero, kPad};
    return letters;
}

namespace {

void require_valid(const MinskyMachine& machine)
{
    const auto violations = validate(machine);
    if (violations.empty()) return;
    std::string msg = "invalid machine:";
    for (const auto& v : violations) msg += " " + v + ";";
    throw MachineError(msg);
}

std::set<Letter> transitions_with(const MinskyMachine& machine, std::initializer_list<Operation> ops)
{
    std::set<Letter> out;
    for (const auto& t : machine.transitions()) {
        if (std::find(ops.begin(), ops.end(), t.op) != ops.end()) out.emplace(t.id);
    }
    return out;
}

std::set<Letter> all_transitions(const MinskyMachine& machine)
{
    std::set<Letter> out;
    for (const auto& t : machine.transitions()) out.emplace(t.id);
    return out;
}

std::set<Letter> unite(std::initializer_list<std::set<Letter>> parts)
{
    std::set<Letter> out;
    for (const auto& p : parts) out.insert(p.begin(), p.end());
    return out;
}

Formula atom(const Letter& l) { return Formula::atom(l); }
Formula any(const std::set<Letter>& ls) { return Formula::any_of(ls); }

Formula separators() { return Formula::letter_set({kSep0, kSep1, kSepZero}); }
Formula alternating_separators() { return Formula::letter_set({kSep0, kSep1}); }
Formula separator(int beta) { return atom(beta == 0 ? kSep0 : kSep1); }

using F = Formula;

} // namespace

Alphabet build_alphabet(const MinskyMachine& machine)
{
    require_valid(machine);
    std::vector<Letter> letters{kA, kB, kAHat, kBHat};
    for (const auto& t : machine.transitions()) {
        const Letter l(t.id);
        if (std::find(reserved_letters().begin(), reserved_letters().end(), l) != reserved_letters().end()) {
            throw ReductionError("transition id '" + t.id + "' collides with a reserved letter");
        }
        if (!is_letter_token(t.id) || is_keyword(t.id)) {
            throw ReductionError("transition id '" + t.id + "' is not usable as a letter");
        }
        letters.push_back(l);
    }
    letters.insert(letters.end(), {kSep0, kSep1, kSepZero, kPad});
    return Alphabet(std::move(letters));
}

Type complement(Type t) noexcept
{
    switch (t) {
    case Type::A: return Type::AHat;
    case Type::AHat: return Type::A;
    case Type::B: return Type::BHat;
    case Type::BHat: return Type::B;
    case Type::Sep0: return Type::Sep1;
    case Type::Sep1: return Type::Sep0;
    case Type::Zero: return Type::ZeroBar;
    case Type::ZeroBar: return Type::Zero;
    }
    return t;
}

std::string_view to_string(Type t) noexcept
{
    switch (t) {
    case Type::A: return "a";
    case Type::AHat: return "ah";
    case Type::B: return "b";
    case Type::BHat: return "bh";
    case Type::Sep0: return "0";
    case Type::Sep1: return "1";
    case Type::Zero: return "zero";
    case Type::ZeroBar: return "zerobar";
    }
    return "?";
}

PartitionTable::PartitionTable(const MinskyMachine& machine)
{
    const auto idx = [](Type t) { return static_cast<std::size_t>(t); };
    a_[idx(Type::A)] = unite({{kA}, transitions_with(machine, {Operation::Inc1})});
    a_[idx(Type::AHat)] = unite({{kAHat}, transitions_with(machine, {Operation::Dec1})});
    a_[idx(Type::B)] = unite({{kB}, transitions_with(machine, {Operation::Inc2})});
    a_[idx(Type::BHat)] = unite({{kBHat}, transitions_with(machine, {Operation::Dec2})});
    a_[idx(Type::Sep0)] = {kSep0};
    a_[idx(Type::Sep1)] = {kSep1};
    a_[idx(Type::Zero)] = transitions_with(machine, {Operation::Zero1, Operation::Zero2});
    a_[idx(Type::ZeroBar)] = {kSepZero};

    b_[idx(Type::A)] = {kA};
    b_[idx(Type::AHat)] = {kAHat};
    b_[idx(Type::B)] = {kB};
    b_[idx(Type::BHat)] = {kBHat};
    b_[idx(Type::Sep0)] = all_transitions(machine);
    b_[idx(Type::Sep1)] = {kSep0, kSep1, kSepZero};

    for (const auto& cls : a_) letters_.insert(cls.begin(), cls.end());
}

const std::set<Letter>& PartitionTable::a_class(Type t) const
{
    return a_.at(static_cast<std::size_t>(t));
}

const std::set<Letter>& PartitionTable::b_class(Type t) const
{
    return b_.at(static_cast<std::size_t>(t));
}

std::optional<Type> PartitionTable::a_type_of(const Letter& l) const
{
    for (Type t : kTypesA) {
        if (a_class(t).contains(l)) return t;
    }
    return std::nullopt;
}

std::optional<Type> PartitionTable::b_type_of(const Letter& l) const
{
    for (Type t : kTypesB) {
        if (b_class(t).contains(l)) return t;
    }
    return std::nullopt;
}

const std::vector<std::array<Type, 4>>& PartitionTable::tuples_a()
{
    static const auto tuples = [] {
        std::vector<std::array<Type, 4>> out;
        for (Type x : {Type::A, Type::AHat})
            for (Type y : {Type::B, Type::BHat})
                for (Type z : {Type::Sep0, Type::Sep1})
                    for (Type w : {Type::Zero, Type::ZeroBar}) out.push_back({x, y, z, w});
        return out;
    }();
    return tuples;
}

const std::vector<std::array<Type, 3>>& PartitionTable::tuples_b()
{
    static const auto tuples = [] {
        std::vector<std::array<Type, 3>> out;
        for (Type x : {Type::A, Type::AHat})
            for (Type y : {Type::B, Type::BHat})
                for (Type z : {Type::Sep0, Type::Sep1}) out.push_back({x, y, z});
        return out;
    }();
    return tuples;
}

Formula last_separator(int beta)
{
    // $beta & X G !$beta
    return F::conj(separator(beta), F::next(F::always(F::negate(separator(beta)))));
}

Formula next_separator(int beta)
{
    // X((!($0 | $1)) U $beta)
    return F::next(F::until(F::negate(alternating_separators()), separator(beta)));
}

Formula phi_symb(const MinskyMachine& machine)
{
    require_valid(machine);
    const F dollar = separators();
    const F pad = atom(kPad);
    const F trans = any(all_transitions(machine));
    const Letter init(machine.t_init());
    const Letter final(machine.t_final());

    // $ & X((!#) U ($ & X G #)) & G(($ & !X #) -> X(a U (b U (T & X(ah U (bh U $))))))
    const F block = F::next(F::until(
        atom(kA),
        F::until(atom(kB), F::conj(trans, F::next(F::until(atom(kAHat), F::until(atom(kBHat), dollar)))))));
    const F form = F::conj(F::conj(dollar, F::next(F::until(F::negate(pad), F::conj(dollar, F::next(F::always(pad)))))),
                           F::always(F::implies(F::conj(dollar, F::negate(F::next(pad))), block)));

    // (P1) X t_init & F(t_final & X(G !T))
    const F p1 = F::conj(F::next(atom(init)), F::eventually(F::conj(atom(final), F::next(F::always(F::negate(trans))))));

    // (P2) G /\_t (t -> !X \/_{t' : trg(t) != src(t')} ((!T) U t'))
    std::vector<F> chain;
    for (const auto& t : machine.transitions()) {
        std::vector<F> wrong_successors;
        for (const auto& t2 : machine.transitions()) {
            if (t.trg != t2.src) wrong_successors.push_back(F::until(F::negate(trans), atom(Letter(t2.id))));
        }
        chain.push_back(F::implies(atom(Letter(t.id)), F::negate(F::next(F::disj_all(wrong_successors)))));
    }
    const F p2 = F::always(F::conj_all(chain));

    // (P3), (P4) zero tests leave the tested counter empty in the hatted block
    const F p3 = F::always(F::implies(any(transitions_with(machine, {Operation::Zero1})),
                                      F::until(F::negate(atom(kAHat)), dollar)));
    const F p4 = F::always(F::implies(any(transitions_with(machine, {Operation::Zero2})),
                                      F::until(F::negate(atom(kBHat)), dollar)));

    // (P5a) $0 & G(T_zero -> (!$) U $z)
    const F p5a = F::conj(atom(kSep0), F::always(F::implies(any(transitions_with(machine, {Operation::Zero1, Operation::Zero2})),
                                                            F::until(F::negate(dollar), atom(kSepZero)))));
    // (P5b)
    const auto non_zero = transitions_with(machine, {Operation::Inc1, Operation::Inc2, Operation::Dec1, Operation::Dec2});
    const F p5b_sep = F::always(F::implies(any(non_zero), F::until(F::negate(dollar), alternating_separators())));
    std::vector<F> alternation;
    for (int beta : {0, 1}) {
        // the until starts after the current separator; read at $beta itself it could never hold
        alternation.push_back(F::implies(F::conj(separator(beta), F::negate(F::next(pad))),
                                         F::next(F::until(F::negate(alternating_separators()), separator(1 - beta)))));
    }
    const F p5b = F::conj(p5b_sep, F::always(F::conj_all(alternation)));

    return F::conj_all({form, p1, p2, p3, p4, p5a, p5b});
}

Formula phi_count(const MinskyMachine& machine)
{
    require_valid(machine);
    const PartitionTable table(machine);
    const Rational half(1, 2);
    const Letter final(machine.t_final());

    auto phi_beta = [&](int beta) {
        std::vector<F> conjuncts;
        for (const auto& tuple : PartitionTable::tuples_a()) {
            std::set<Letter> cls;
            for (Type t : tuple) cls.insert(table.a_class(t).begin(), table.a_class(t).end());
            conjuncts.push_back(F::freq_until(half, any(cls), last_separator(beta)));
        }
        return F::next(F::conj_all(conjuncts));
    };

    std::vector<F> psi_conjuncts;
    for (const auto& tuple : PartitionTable::tuples_b()) {
        std::set<Letter> cls;
        for (Type t : tuple) cls.insert(table.b_class(t).begin(), table.b_class(t).end());
        psi_conjuncts.push_back(F::freq_until(half, any(cls), atom(final)));
    }
    const F psi = F::conj_all(psi_conjuncts);

    const F dollar = separators();
    const F trans = any(all_transitions(machine));
    return F::always(F::conj_all({
        F::implies(F::conj(dollar, next_separator(0)), phi_beta(0)),
        F::implies(F::conj(dollar, next_separator(1)), phi_beta(1)),
        F::implies(F::conj(trans, F::negate(atom(final))), psi),
    }));
}

Formula reduce(const MinskyMachine& machine)
{
    return F::conj(phi_symb(machine), phi_count(machine));
}

} // namespace fltl::reduction
