#include "itop/theorems.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <limits>
#include <memory>
#include <mutex>
#include <random>
#include <thread>

#include <json.hpp>

namespace itop {

namespace {

using Fail = std::optional<std::string>;

constexpr std::uint64_t kExhaustiveCap = std::uint64_t{1} << 22;
constexpr int kMaxBound = 5;

// ---------------------------------------------------------------------------
// Shared enumerations

const std::vector<Topology>& topologies(int n) {
    static std::array<std::once_flag, kMaxBound + 1> once;
    static std::array<std::vector<Topology>, kMaxBound + 1> store;
    if (n < 1 || n > kMaxBound) throw CapExceeded("ground set size must be between 1 and 5");
    std::call_once(once[static_cast<std::size_t>(n)], [n] {
        store[static_cast<std::size_t>(n)] = enumerate_topologies(n, EnumerationOptions{.allow_five = true});
    });
    return store[static_cast<std::size_t>(n)];
}

std::uint64_t pow_u64(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

/// Everything about one (τ, I) the checkers keep asking for, computed once through the library.
struct SpaceContext {
    SpaceContext(const Topology& t, const Ideal& i)
        : space(t, i), ann(annihilator(i)), star_top(tau_star(space)), sharp_top(tau_sharp(space)) {
        const int n = t.width();
        const auto count = std::size_t{1} << n;
        star.resize(count);
        sharp.resize(count);
        cl.resize(count);
        in.resize(count);
        ps.resize(count);
        ps_sharp.resize(count);
        for (std::size_t m = 0; m < count; ++m) {
            const Subset a{static_cast<Subset::mask_type>(m)};
            star[m] = local_function(a, space);
            sharp[m] = sharp_function(a, space);
            cl[m] = closure(a, t);
            in[m] = interior(a, t);
            ps[m] = psi(a, space);
            ps_sharp[m] = psi_sharp(a, space);
        }
    }

    int width() const { return space.width(); }

    IdealSpace space;
    Ideal ann;
    Topology star_top;
    Topology sharp_top;
    std::vector<Subset> star, sharp, cl, in, ps, ps_sharp;
};

struct Instance {
    int n = 0;
    std::shared_ptr<const SpaceContext> ctx;
    std::optional<Topology> topology;
    std::optional<Ideal> ideal;
    std::optional<Ideal> ideal_b;
    Subset a, b;
    std::optional<SetFamily> j, k;
    std::optional<Topology> sigma;
    std::optional<FiniteMap> map;

    const Topology& tau() const { return ctx ? ctx->space.topology() : *topology; }
    const Ideal& id() const { return ctx ? ctx->space.ideal() : *ideal; }
    Subset full() const { return Subset::full(n); }
    Subset co(Subset s) const { return s.complement(n); }
    std::size_t ix(Subset s) const { return s.bits(); }
};

// ---------------------------------------------------------------------------
// Domains

std::uint64_t codomain_cases(int n) {
    std::uint64_t total = 0;
    for (int m = 1; m <= n; ++m) total += topologies(m).size() * pow_u64(static_cast<std::uint64_t>(m), n);
    return total;
}

std::uint64_t axis_size(Axis axis, int n) {
    switch (axis) {
        case Axis::Topology: return topologies(n).size();
        case Axis::Ideal:
        case Axis::IdealB:
        case Axis::SubsetA:
        case Axis::SubsetB: return std::uint64_t{1} << n;
        case Axis::FamilyJ:
        case Axis::FamilyK: return std::uint64_t{1} << (1 << n);
        case Axis::Codomain: return codomain_cases(n);
    }
    return 0;
}

SetFamily family_from_index(int n, std::uint64_t index) {
    std::vector<Subset> members;
    for (Subset::mask_type m = 0; m < (Subset::mask_type{1} << n); ++m)
        if ((index >> m) & 1U) members.emplace_back(m);
    return SetFamily(n, std::move(members));
}

void decode_codomain(int n, std::uint64_t c, Instance& inst) {
    for (int m = 1; m <= n; ++m) {
        const auto maps = pow_u64(static_cast<std::uint64_t>(m), n);
        const auto block = topologies(m).size() * maps;
        if (c < block) {
            inst.sigma = topologies(m)[c / maps];
            auto code = c % maps;
            std::vector<int> image(static_cast<std::size_t>(n));
            for (int x = n - 1; x >= 0; --x) {
                image[static_cast<std::size_t>(x)] = static_cast<int>(code % static_cast<std::uint64_t>(m));
                code /= static_cast<std::uint64_t>(m);
            }
            inst.map = FiniteMap(m, std::move(image));
            return;
        }
        c -= block;
    }
    throw std::out_of_range("codomain index out of range");
}

class Domain {
public:
    Domain(int n, std::vector<Axis> axes) : n_(n), axes_(std::move(axes)) {
        size_ = 1;
        for (auto a : axes_) {
            sizes_.push_back(axis_size(a, n));
            size_ = saturating_mul(size_, sizes_.back());
        }
        auto pos = [&](Axis a) { return std::find(axes_.begin(), axes_.end(), a) - axes_.begin(); };
        t_pos_ = static_cast<std::size_t>(pos(Axis::Topology));
        i_pos_ = static_cast<std::size_t>(pos(Axis::Ideal));
    }

    int n() const { return n_; }
    std::uint64_t size() const { return size_; }
    const std::vector<Axis>& axes() const { return axes_; }
    const std::vector<std::uint64_t>& sizes() const { return sizes_; }
    bool has_space() const { return t_pos_ < axes_.size() && i_pos_ < axes_.size(); }

    /// Precomputes a context for every (τ, I); only sensible when the domain is walked in full.
    void precompute_contexts() {
        if (!has_space()) return;
        const auto& tops = topologies(n_);
        const auto ideals = std::size_t{1} << n_;
        contexts_.resize(tops.size() * ideals);
        for (std::size_t t = 0; t < tops.size(); ++t)
            for (std::size_t g = 0; g < ideals; ++g)
                contexts_[t * ideals + g] = std::make_shared<const SpaceContext>(
                    tops[t], ideal_generated(n_, Subset{static_cast<Subset::mask_type>(g)}));
    }

    std::vector<std::uint64_t> coords_of(std::uint64_t flat) const {
        std::vector<std::uint64_t> c(axes_.size());
        for (std::size_t k = axes_.size(); k-- > 0;) {
            c[k] = flat % sizes_[k];
            flat /= sizes_[k];
        }
        return c;
    }

    Instance make(const std::vector<std::uint64_t>& c) const {
        Instance inst;
        inst.n = n_;
        for (std::size_t k = 0; k < axes_.size(); ++k) {
            const auto v = c[k];
            const Subset s{static_cast<Subset::mask_type>(v)};
            switch (axes_[k]) {
                case Axis::Topology: inst.topology = topologies(n_)[v]; break;
                case Axis::Ideal: inst.ideal = ideal_generated(n_, s); break;
                case Axis::IdealB: inst.ideal_b = ideal_generated(n_, s); break;
                case Axis::SubsetA: inst.a = s; break;
                case Axis::SubsetB: inst.b = s; break;
                case Axis::FamilyJ: inst.j = family_from_index(n_, v); break;
                case Axis::FamilyK: inst.k = family_from_index(n_, v); break;
                case Axis::Codomain: decode_codomain(n_, v, inst); break;
            }
        }
        if (has_space()) {
            if (!contexts_.empty())
                inst.ctx = contexts_[c[t_pos_] * (std::size_t{1} << n_) + c[i_pos_]];
            else
                inst.ctx = std::make_shared<const SpaceContext>(*inst.topology, *inst.ideal);
        }
        return inst;
    }

private:
    int n_;
    std::vector<Axis> axes_;
    std::vector<std::uint64_t> sizes_;
    std::uint64_t size_ = 1;
    std::size_t t_pos_ = 0, i_pos_ = 0;
    std::vector<std::shared_ptr<const SpaceContext>> contexts_;
};

// ---------------------------------------------------------------------------
// Instance <-> document

SpaceDocument to_document(const Instance& inst, const std::vector<Axis>& axes) {
    const int n = inst.n;
    auto has = [&](Axis a) { return std::find(axes.begin(), axes.end(), a) != axes.end(); };
    const Topology tau = has(Axis::Topology) ? inst.tau() : indiscrete_topology(n);
    const Ideal ideal = has(Axis::Ideal) ? inst.id() : trivial_ideal(n);
    SpaceDocument doc(GroundSet::letters(n), DeclaredTopology{TopologyForm::Explicit, tau.family(), tau},
                      IdealForm::Generated, ideal);
    if (has(Axis::SubsetA)) doc.sets.push_back({"A", inst.a});
    if (has(Axis::SubsetB)) doc.sets.push_back({"B", inst.b});
    if (has(Axis::IdealB)) doc.families.push_back({"I2", inst.ideal_b->family()});
    if (has(Axis::FamilyJ)) doc.families.push_back({"J", *inst.j});
    if (has(Axis::FamilyK)) doc.families.push_back({"K", *inst.k});
    if (has(Axis::Codomain)) {
        const auto& sigma = *inst.sigma;
        doc.spaces.push_back(
            {"Y", GroundSet::numbered(sigma.width()), DeclaredTopology{TopologyForm::Explicit, sigma.family(), sigma}});
        doc.maps.push_back({"f", "Y", *inst.map});
    }
    return doc;
}

Instance from_document(const SpaceDocument& doc, const std::vector<Axis>& axes) {
    Instance inst;
    inst.n = doc.ground().size();
    auto need_set = [&](const char* name) {
        const auto* s = doc.find_set(name);
        if (!s) throw std::invalid_argument(std::string("document has no set '") + name + "'");
        return s->value;
    };
    auto need_family = [&](const char* name) {
        const auto* f = doc.find_family(name);
        if (!f) throw std::invalid_argument(std::string("document has no family '") + name + "'");
        return f->value;
    };
    bool space = false;
    for (auto axis : axes) {
        switch (axis) {
            case Axis::Topology: inst.topology = doc.topology().resolved; break;
            case Axis::Ideal: inst.ideal = doc.ideal(); break;
            case Axis::IdealB: inst.ideal_b = Ideal(need_family("I2")); break;
            case Axis::SubsetA: inst.a = need_set("A"); break;
            case Axis::SubsetB: inst.b = need_set("B"); break;
            case Axis::FamilyJ: inst.j = need_family("J"); break;
            case Axis::FamilyK: inst.k = need_family("K"); break;
            case Axis::Codomain: {
                const auto* m = doc.find_map("f");
                if (!m) throw std::invalid_argument("document has no map 'f'");
                inst.map = m->map;
                inst.sigma = doc.codomain_topology(*m);
                break;
            }
        }
        space = space || axis == Axis::Ideal;
    }
    if (space && inst.topology) inst.ctx = std::make_shared<const SpaceContext>(*inst.topology, *inst.ideal);
    return inst;
}

// ---------------------------------------------------------------------------
// Statements

Fail unless(bool ok, const char* claim) { return ok ? Fail{} : Fail{claim}; }

bool ideal_is_full(const Ideal& i) { return i.generator() == Subset::full(i.width()); }
bool ideal_is_trivial(const Ideal& i) { return i.generator().empty(); }

template <class Fn>
void for_each_subset(int n, Fn&& fn) {
    for (Subset::mask_type m = 0; m < (Subset::mask_type{1} << n); ++m) fn(Subset{m});
}

bool is_maximal(const Ideal& i) { return !ideal_is_full(i) && static_cast<bool>(is_maximal_ideal(i)); }
bool is_minimal(const Ideal& i) {
    return !ideal_is_full(i) && !ideal_is_trivial(i) && static_cast<bool>(is_minimal_ideal(i));
}

/// Families to quantify over inside a single instance: all of them while that is
/// cheap, otherwise a fixed pseudo-random selection plus every singleton family.
std::vector<SetFamily> inner_families(int n) {
    std::vector<SetFamily> out;
    const int subsets = 1 << n;
    if (subsets <= 16) {
        for (std::uint64_t f = 0; f < (std::uint64_t{1} << subsets); ++f) out.push_back(family_from_index(n, f));
        return out;
    }
    for_each_subset(n, [&](Subset s) { out.push_back(SetFamily(n, {s})); });
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << subsets) - 1);
    for (int k = 0; k < 4096; ++k) out.push_back(family_from_index(n, pick(rng)));
    return out;
}

using Check = std::function<Fail(const Instance&)>;

struct TheoremCase {
    TheoremInfo info;
    Check check;
};

Fail t_lemma_ideal_member(const Instance& s) {
    const auto& c = *s.ctx;
    return unless(!s.id().contains(s.a) || c.star[s.ix(s.a)].empty(), "A ∈ I ⟹ A* = ∅");
}

Fail t_local_meet(const Instance& s) {
    const Ideal& i = s.id();
    const Ideal& j = *s.ideal_b;
    const Ideal meet = ideal_intersection(i, j);
    if (meet.family() != family_intersection(i.family(), j.family())) return "I ∩ I2 is the family intersection";
    const auto& tau = s.tau();
    Fail out;
    for_each_subset(s.n, [&](Subset a) {
        if (!out && local_function(a, tau, meet) != (local_function(a, tau, i) | local_function(a, tau, j)))
            out = "A*(I∩I2) = A*(I) ∪ A*(I2)";
    });
    if (out) return out;
    const auto lhs = tau_star(IdealSpace(tau, meet)).family();
    const auto rhs = family_intersection(tau_star(IdealSpace(tau, i)).family(), tau_star(IdealSpace(tau, j)).family());
    return unless(lhs == rhs, "τ*(I∩I2) = τ*(I) ∩ τ*(I2)");
}

Fail t_maximal_characterisations(const Instance& s) {
    const Ideal& i = s.id();
    if (ideal_is_full(i)) return {};
    const int n = s.n;
    const Subset g = i.generator();
    bool by_definition = true;
    for_each_ideal(n, [&](const Ideal& j) {
        if (g.subset_of(j.generator()) && !(j == i || ideal_is_full(j))) by_definition = false;
    });
    const bool complement = static_cast<bool>(is_maximal_ideal(i));
    const bool product = static_cast<bool>(is_maximal_ideal_product(i));
    bool epsilon_singleton = false;
    for (int x = 0; x < n; ++x) epsilon_singleton = epsilon_singleton || i == ideal_epsilon(n, Subset::singleton(x));
    if (by_definition != product) return "maximal ⟺ (A∩B ∈ I ⟹ A ∈ I or B ∈ I)";
    if (by_definition != complement) return "maximal ⟺ (A ∈ I or X∖A ∈ I)";
    return unless(by_definition == epsilon_singleton, "maximal ⟺ I = I_ε({x}) for some x");
}

Fail t_maximal_star(const Instance& s) {
    const auto& c = *s.ctx;
    if (!is_maximal(s.id())) return {};
    Fail out;
    for_each_subset(s.n, [&](Subset a) {
        if (out) return;
        if (!c.star[s.ix(a)].empty() && !c.star[s.ix(s.co(a))].empty()) out = "A* = ∅ or (X∖A)* = ∅";
        else if (!c.star_top.is_closed(a) && !c.star_top.is_open(a)) out = "A is τ*-closed or τ*-open";
    });
    if (out) return out;
    return unless(static_cast<bool>(is_t0(c.star_top)), "(X, τ*) is T0");
}

Fail t_minimal_characterisations(const Instance& s) {
    const Ideal& i = s.id();
    if (ideal_is_full(i) || ideal_is_trivial(i)) return {};
    const int n = s.n;
    bool by_definition = true;
    for_each_ideal(n, [&](const Ideal& j) {
        if (j.generator().subset_of(i.generator()) && !(j == i || ideal_is_trivial(j))) by_definition = false;
    });
    bool all_equal = true;
    std::optional<Subset> seen;
    for (auto m : i.family()) {
        if (m.empty()) continue;
        if (seen && *seen != m) all_equal = false;
        seen = m;
    }
    const bool two_members = i.family().size() == 2;
    bool singleton_generated = false;
    for (int x = 0; x < n; ++x) singleton_generated = singleton_generated || i == ideal_generated(n, Subset::singleton(x));
    const bool reported = static_cast<bool>(is_minimal_ideal(i));
    if (by_definition != all_equal) return "minimal ⟺ all non-empty members coincide";
    if (by_definition != two_members) return "minimal ⟺ |I| = 2";
    if (by_definition != singleton_generated) return "minimal ⟺ I = I({x}) for some x";
    return unless(by_definition == reported, "is_minimal_ideal agrees with the definition");
}

Fail t_minimal_epsilon_duality(const Instance& s) {
    if (s.a.empty() || s.a == s.full()) return {};
    const bool minimal = static_cast<bool>(is_minimal_ideal(ideal_generated(s.n, s.a)));
    const bool maximal = static_cast<bool>(is_maximal_ideal(ideal_epsilon(s.n, s.a)));
    return unless(minimal == maximal, "I(A) minimal ⟺ I_ε(A) maximal");
}

/// {A | A ∩ M ∈ I for all M ∈ J}, straight from the definition.
SetFamily quotient_by_definition(const Ideal& i, const SetFamily& j) {
    std::vector<Subset> out;
    for_each_subset(i.width(), [&](Subset a) {
        if (std::all_of(j.begin(), j.end(), [&](Subset m) { return i.contains(a & m); })) out.push_back(a);
    });
    return SetFamily(i.width(), std::move(out));
}

Fail t_quotient_basics(const Instance& s) {
    const Ideal& i = s.id();
    const SetFamily& j = *s.j;
    const Ideal q = ideal_quotient(i, j);
    if (q.family() != quotient_by_definition(i, j)) return "(I:J) = {A | ∀J∈J: A∩J ∈ I} and is an ideal";
    if (!i.family().subset_of(q.family())) return "I ⊆ (I:J)";
    if (j.subset_of(i.family()) != ideal_is_full(q)) return "J ⊆ I ⟺ (I:J) = 2^X";
    return unless(!j.contains(s.full()) || q == i, "X ∈ J ⟹ (I:J) = I");
}

Fail t_quotient_antitone(const Instance& s) {
    if (!s.j->subset_of(*s.k)) return {};
    return unless(ideal_quotient(s.id(), *s.k).family().subset_of(ideal_quotient(s.id(), *s.j).family()),
                  "J ⊆ K ⟹ (I:K) ⊆ (I:J)");
}

Fail t_quotient_meet(const Instance& s) {
    const auto lhs = ideal_quotient(ideal_intersection(s.id(), *s.ideal_b), *s.j);
    const auto rhs = family_intersection(ideal_quotient(s.id(), *s.j).family(), ideal_quotient(*s.ideal_b, *s.j).family());
    return unless(lhs.family() == rhs, "(I∩I2:J) = (I:J) ∩ (I2:J)");
}

Fail t_annihilator_principal(const Instance& s) {
    const Ideal ann = annihilator(ideal_generated(s.n, s.a));
    if (ann != annihilator_of(s.n, s.a)) return "Ann(I(A)) = Ann_A";
    return unless(ann == ideal_epsilon(s.n, s.a), "Ann(I(A)) = I_ε(A)");
}

Fail t_quotient_corollary(const Instance& s) {
    const Ideal& i = s.id();
    const int n = s.n;
    if (!ideal_is_full(ideal_quotient(i, i.family()))) return "(I:I) = 2^X";
    if (!ideal_is_full(ideal_quotient(improper_ideal(n), i.family()))) return "(2^X:I) = 2^X";
    if (!ideal_is_full(ideal_quotient(i, SetFamily(n, {Subset{}})))) return "(I:{∅}) = 2^X";
    if (ideal_quotient(i, s.tau().family()) != i) return "(I:τ) = I";
    return unless(static_cast<bool>(is_faithful(s.tau().family())), "every topology is faithful");
}

Fail t_dense_hayashi_samuel(const Instance& s) {
    const bool dense = static_cast<bool>(is_dense(s.a, s.tau()));
    const bool hs = static_cast<bool>(is_hayashi_samuel(IdealSpace(s.tau(), annihilator_of(s.n, s.a))));
    return unless(dense == hs, "A dense ⟺ (X, τ, Ann_A) is Hayashi-Samuel");
}

Fail t_maximal_quotient(const Instance& s) {
    const Ideal& i = s.id();
    if (ideal_is_full(i)) return {};
    const bool maximal = static_cast<bool>(is_maximal_ideal(i));
    bool fixed_outside = true;   // (I:J) = I whenever J ⊄ I
    bool two_valued = true;      // (I:J) ∈ {I, 2^X} for every J
    for (const auto& j : inner_families(s.n)) {
        const Ideal q = ideal_quotient(i, j);
        if (!j.subset_of(i.family()) && q != i) fixed_outside = false;
        if (q != i && !ideal_is_full(q)) two_valued = false;
    }
    if (maximal != fixed_outside) return "maximal ⟺ (I:J) = I for every J ⊄ I";
    return unless(maximal == two_valued, "maximal ⟺ (I:J) ∈ {I, 2^X} for every J");
}

Fail t_annihilator_laws(const Instance& s) {
    const Ideal& i = s.id();
    const int n = s.n;
    const Ideal ann = annihilator(i);
    if (family_intersection(i.family(), ann.family()) != SetFamily(n, {Subset{}})) return "I ∩ Ann(I) = {∅}";
    const Ideal twice = annihilator(ann);
    if (ideal_is_trivial(ann) && !ideal_is_full(twice)) return "Ann(I) = {∅} ⟹ Ann(Ann(I)) = 2^X";
    if (!ideal_is_trivial(ann) && twice != i) return "Ann(I) ≠ {∅} ⟹ Ann(Ann(I)) = I";
    if (!ideal_is_full(i) && !ideal_is_trivial(i) && !ideal_is_full(ann))
        return unless(static_cast<bool>(is_minimal_ideal(i)) == static_cast<bool>(is_maximal_ideal(ann)),
                      "I minimal ⟺ Ann(I) maximal");
    return {};
}

Fail t_sharp_reduction(const Instance& s) {
    return unless(sharp_function_literal(s.a, s.ctx->space) == s.ctx->sharp[s.ix(s.a)], "A♯(I,τ) = A*(Ann(I),τ)");
}

Fail t_sharp_properties(const Instance& s) {
    const auto& c = *s.ctx;
    const auto sh = [&](Subset x) { return c.sharp[s.ix(x)]; };
    const Subset a = s.a, b = s.b;
    if (a.subset_of(b) && !sh(a).subset_of(sh(b))) return "(a) A ⊆ B ⟹ A♯ ⊆ B♯";
    if (c.cl[s.ix(sh(a))] != sh(a) || !sh(a).subset_of(c.cl[s.ix(a)])) return "(b) A♯ = cl(A♯) ⊆ cl(A)";
    if (!sh(a & b).subset_of(sh(a) & sh(b))) return "(c) (A∩B)♯ ⊆ A♯ ∩ B♯";
    if (sh(a | b) != (sh(a) | sh(b))) return "(d) (A∪B)♯ = A♯ ∪ B♯";
    if (!(sh(a) - sh(b)).subset_of(sh(a - b))) return "(e) A♯∖B♯ ⊆ (A∖B)♯";
    const bool negligible = c.ann.contains(a);
    if (negligible && !sh(a).empty()) return "(f) A ∈ Ann(I) ⟹ A♯ = ∅";
    if (negligible && (sh(a | b) != sh(b) || sh(b - a) != sh(b))) return "(g) A ∈ Ann(I) ⟹ (A∪B)♯ = B♯ = (B∖A)♯";
    return unless(!is_faithful(c.space.ideal().family()) || sh(a) == c.cl[s.ix(a)], "(h) I faithful ⟹ A♯ = cl(A)");
}

Fail t_cover(const Instance& s) {
    const auto& c = *s.ctx;
    const auto x = s.ix(s.a);
    const Subset cl = c.cl[x], st = c.star[x], sh = c.sharp[x];
    if ((st | sh) != cl) return "A♯ ∪ A* = cl(A)";
    if (s.id().contains(s.a) && sh != cl) return "(a) A ∈ I ⟹ A♯ = cl(A)";
    if (c.ann.contains(s.a) && st != cl) return "(b) A ∈ Ann(I) ⟹ A* = cl(A)";
    if (sh.empty() && st != cl) return "(c) A♯ = ∅ ⟹ A* = cl(A)";
    return unless(!st.empty() || sh == cl, "(d) A* = ∅ ⟹ A♯ = cl(A)");
}

Fail t_kuratowski(const Instance& s) {
    const auto& c = *s.ctx;
    const int n = s.n;
    for (int pass = 0; pass < 2; ++pass) {
        const auto& fn = pass == 0 ? c.sharp : c.star;
        const auto k = [&](Subset x) { return x | fn[s.ix(x)]; };
        const Subset a = s.a, b = s.b;
        if (!k(Subset{}).empty()) return pass == 0 ? "(a) cl♯(∅) = ∅" : "cl*(∅) = ∅";
        if (k(Subset::full(n)) != Subset::full(n)) return pass == 0 ? "(b) cl♯(X) = X" : "cl*(X) = X";
        if (!a.subset_of(k(a))) return pass == 0 ? "(c) A ⊆ cl♯(A)" : "A ⊆ cl*(A)";
        if (a.subset_of(b) && !k(a).subset_of(k(b))) return pass == 0 ? "(d) cl♯ is monotone" : "cl* is monotone";
        if ((k(a) | k(b)) != k(a | b)) return pass == 0 ? "(e) cl♯(A) ∪ cl♯(B) = cl♯(A∪B)" : "cl* is additive";
        if (k(k(a)) != k(a)) return pass == 0 ? "(f) cl♯(cl♯(A)) = cl♯(A)" : "cl* is idempotent";
    }
    // The library operators must agree with the tables used above.
    return unless(cl_sharp(s.a, c.space) == (s.a | c.sharp[s.ix(s.a)]) && cl_star(s.a, c.space) == (s.a | c.star[s.ix(s.a)]),
                  "cl♯/cl* agree with A ∪ A♯ / A ∪ A*");
}

Fail t_open_decomposition(const Instance& s) {
    const auto& c = *s.ctx;
    const auto& tau = s.tau().family();
    if (!tau.subset_of(c.star_top.family())) return "τ ⊆ τ*";
    if (!tau.subset_of(c.sharp_top.family())) return "τ ⊆ τ♯";
    return unless(family_intersection(c.star_top.family(), c.sharp_top.family()) == tau, "τ = τ* ∩ τ♯");
}

Fail t_psi(const Instance& s) {
    const auto& c = *s.ctx;
    const auto x = s.ix(s.a);
    if (c.sharp_top.is_open(s.a) != s.a.subset_of(c.ps_sharp[x])) return "A ∈ τ♯ ⟺ A ⊆ Ψ♯(A)";
    if (c.star_top.is_open(s.a) != s.a.subset_of(c.ps[x])) return "A ∈ τ* ⟺ A ⊆ Ψ(A)";
    if ((c.ps_sharp[x] & c.ps[x]) != c.in[x]) return "Ψ♯(A) ∩ Ψ(A) = int(A)";
    if (psi(s.a, c.space.with_ideal(c.ann)) != c.ps_sharp[x]) return "Ψ(A; Ann(I)) = Ψ♯(A; I)";
    if (s.id().contains(s.co(s.a)) && c.ps_sharp[x] != c.in[x]) return "X∖A ∈ I ⟹ Ψ♯(A) = int(A)";
    return unless(!c.ann.contains(s.co(s.a)) || c.ps[x] == c.in[x], "X∖A ∈ Ann(I) ⟹ Ψ(A) = int(A)");
}

Fail t_minimal_sharp(const Instance& s) {
    const auto& c = *s.ctx;
    if (!is_minimal(s.id())) return {};
    if (!c.sharp[s.ix(s.a)].empty() && !c.sharp[s.ix(s.co(s.a))].empty()) return "A♯ = ∅ or (X∖A)♯ = ∅";
    return unless(c.sharp_top.is_closed(s.a) || c.sharp_top.is_open(s.a), "A is τ♯-closed or τ♯-open");
}

Fail t_extremal_closure(const Instance& s) {
    const auto& c = *s.ctx;
    const auto x = s.ix(s.a);
    if (is_maximal(s.id()) && c.sharp[x] != c.cl[x] && c.ps_sharp[x] != c.in[x]) return "maximal ⟹ A♯ = cl(A) or Ψ♯(A) = int(A)";
    return unless(!is_minimal(s.id()) || c.star[x] == c.cl[x] || c.ps[x] == c.in[x],
                  "minimal ⟹ A* = cl(A) or Ψ(A) = int(A)");
}

Fail t_continuity_refinement(const Instance& s) {
    const auto& c = *s.ctx;
    const bool cont = static_cast<bool>(is_continuous(*s.map, s.tau(), *s.sigma));
    const bool star = static_cast<bool>(is_star_continuous(*s.map, c.space, *s.sigma));
    const bool sharp = static_cast<bool>(is_sharp_continuous(*s.map, c.space, *s.sigma));
    if (cont && !sharp) return "continuous ⟹ ♯-continuous";
    if (cont && !star) return "continuous ⟹ *-continuous";
    if (star != static_cast<bool>(is_continuous(*s.map, c.star_top, *s.sigma))) return "*-continuous ⟺ continuous from (X, τ*)";
    return unless(sharp == static_cast<bool>(is_continuous(*s.map, c.sharp_top, *s.sigma)),
                  "♯-continuous ⟺ continuous from (X, τ♯)");
}

Fail t_continuity_decomposition(const Instance& s) {
    const auto& c = *s.ctx;
    const bool cont = static_cast<bool>(is_continuous(*s.map, s.tau(), *s.sigma));
    const bool both = is_star_continuous(*s.map, c.space, *s.sigma) && is_sharp_continuous(*s.map, c.space, *s.sigma);
    return unless(cont == both, "continuous ⟺ *-continuous and ♯-continuous");
}

Fail t_disconnected(const Instance& s) {
    const Subset f = s.a;
    if (f.empty() || f == s.full() || !s.tau().is_closed(f)) return {};
    const Topology sharp = tau_sharp(IdealSpace(s.tau(), ideal_generated(s.n, f)));
    if (is_connected(sharp)) return "(X, τ♯, I(F)) is disconnected";
    return unless(clopen_sets(sharp).contains(s.co(f)), "X∖F is τ♯-clopen");
}

const std::vector<TheoremCase>& registry() {
    using A = Axis;
    static const std::vector<TheoremCase> cases = {
        {{"T1", "If A ∈ I then A* = ∅.", {A::Topology, A::Ideal, A::SubsetA}}, t_lemma_ideal_member},
        {{"T2", "A*(I∩I2) = A*(I) ∪ A*(I2) and τ*(I∩I2) = τ*(I) ∩ τ*(I2) for a second ideal I2.", {A::Topology, A::Ideal, A::IdealB}},
         t_local_meet},
        {{"T3",
          "For a proper ideal, maximality (by definition) ⟺ the product test ⟺ the complement test ⟺ I = I_ε({x}).",
          {A::Ideal}},
         t_maximal_characterisations},
        {{"T4", "If I is maximal: A* = ∅ or (X∖A)* = ∅, every A is τ*-closed or τ*-open, and (X, τ*) is T0.",
          {A::Topology, A::Ideal}},
         t_maximal_star},
        {{"T5", "For a proper I ≠ {∅}: minimal ⟺ all non-empty members coincide ⟺ |I| = 2 ⟺ I = I({x}).", {A::Ideal}},
         t_minimal_characterisations},
        {{"T6", "I(A) is minimal ⟺ I_ε(A) is maximal (A ∉ {∅, X}).", {A::SubsetA}}, t_minimal_epsilon_duality},
        {{"T7", "(I:J) is the ideal {A | A∩J ∈ I ∀J ∈ J}; I ⊆ (I:J); J ⊆ I ⟺ (I:J) = 2^X; X ∈ J ⟹ (I:J) = I.",
          {A::Ideal, A::FamilyJ}},
         t_quotient_basics},
        {{"T8", "J ⊆ K ⟹ (I:K) ⊆ (I:J).", {A::Ideal, A::FamilyJ, A::FamilyK}}, t_quotient_antitone},
        {{"T9", "(I∩I2:J) = (I:J) ∩ (I2:J) for a second ideal I2.", {A::Ideal, A::IdealB, A::FamilyJ}}, t_quotient_meet},
        {{"T10", "Ann(I(A)) = Ann_A = I_ε(A).", {A::SubsetA}}, t_annihilator_principal},
        {{"T11", "(I:I) = (2^X:I) = (I:{∅}) = 2^X, (I:τ) = I, and every topology is faithful.", {A::Topology, A::Ideal}},
         t_quotient_corollary},
        {{"T12", "A is dense ⟺ (X, τ, Ann_A) is a Hayashi-Samuel space.", {A::Topology, A::SubsetA}},
         t_dense_hayashi_samuel},
        {{"T13", "A proper I is maximal ⟺ (I:J) = I for every J ⊄ I ⟺ (I:J) ∈ {I, 2^X} for every J.", {A::Ideal},
          true, "J ranges over every family while 2^X has at most 16 members; beyond that, over all singleton families plus 4096 fixed pseudo-random ones"},
         t_maximal_quotient},
        {{"T14",
          "I ∩ Ann(I) = {∅}; Ann(Ann(I)) = 2^X when Ann(I) = {∅} and = I otherwise; I minimal ⟺ Ann(I) maximal.",
          {A::Ideal}},
         t_annihilator_laws},
        {{"T15", "A♯(I, τ) = A*(Ann(I), τ) (defining condition vs. annihilator reduction).",
          {A::Topology, A::Ideal, A::SubsetA}},
         t_sharp_reduction},
        {{"T16", "Sharp function laws (a)-(h): monotone, closed, ⊆ cl(A), additive, Ann(I)-negligible, cl(A) when faithful.",
          {A::Topology, A::Ideal, A::SubsetA, A::SubsetB}},
         t_sharp_properties},
        {{"T17", "A♯ ∪ A* = cl(A), with the four consequences for A ∈ I, A ∈ Ann(I), A♯ = ∅, A* = ∅.",
          {A::Topology, A::Ideal, A::SubsetA}},
         t_cover},
        {{"T18", "cl♯ (and cl*) satisfy the Kuratowski closure axioms.", {A::Topology, A::Ideal, A::SubsetA, A::SubsetB}},
         t_kuratowski},
        {{"T19", "τ* and τ♯ are topologies refining τ, and τ = τ* ∩ τ♯.", {A::Topology, A::Ideal}}, t_open_decomposition},
        {{"T20", "A ∈ τ♯ ⟺ A ⊆ Ψ♯(A); Ψ♯(A) ∩ Ψ(A) = int(A); Ψ(A; Ann(I)) = Ψ♯(A; I); and the int(A) corollaries.",
          {A::Topology, A::Ideal, A::SubsetA}},
         t_psi},
        {{"T21", "If I is minimal: A♯ = ∅ or (X∖A)♯ = ∅, and A is τ♯-closed or τ♯-open.",
          {A::Topology, A::Ideal, A::SubsetA}},
         t_minimal_sharp},
        {{"T22", "Maximal ⟹ A♯ = cl(A) or Ψ♯(A) = int(A); minimal ⟹ A* = cl(A) or Ψ(A) = int(A).",
          {A::Topology, A::Ideal, A::SubsetA}},
         t_extremal_closure},
        {{"T23", "Continuous ⟹ ♯-continuous and *-continuous; ♯/*-continuity is continuity from τ♯/τ*.",
          {A::Topology, A::Ideal, A::Codomain}},
         t_continuity_refinement},
        {{"T24", "f is continuous ⟺ f is *-continuous and ♯-continuous.", {A::Topology, A::Ideal, A::Codomain}},
         t_continuity_decomposition},
        {{"T25", "If F is τ-closed and F ∉ {∅, X}, then (X, τ♯, I(F)) is disconnected (X∖F is clopen).",
          {A::Topology, A::SubsetA}},
         t_disconnected},
        {{"INF1", "On an infinite X the finite subsets form a faithful ideal.", {}, false,
          "OUT-OF-SCOPE-INFINITE: on a finite X the finite subsets are all of 2^X, which is not proper, so the "
          "statement has no finite instance"},
         nullptr},
    };
    return cases;
}

// ---------------------------------------------------------------------------
// Predicates for falsify

using Test = std::function<bool(const Instance&)>;

struct PredicateCase {
    PredicateInfo info;
    Test test;
};

const std::vector<PredicateCase>& predicates() {
    using A = Axis;
    const std::vector<Axis> point{A::Topology, A::Ideal, A::SubsetA};
    const std::vector<Axis> maps{A::Topology, A::Ideal, A::Codomain};
    const std::vector<Axis> pair{A::Ideal, A::FamilyJ, A::FamilyK};
    const std::vector<Axis> single{A::Ideal, A::FamilyJ};
    static const std::vector<PredicateCase> cases = {
        {{"tau_open", "A ∈ τ", point}, [](const Instance& s) { return s.tau().is_open(s.a); }},
        {{"tau_closed", "X∖A ∈ τ", point}, [](const Instance& s) { return s.tau().is_closed(s.a); }},
        {{"tau_star_open", "A ∈ τ*", point}, [](const Instance& s) { return s.ctx->star_top.is_open(s.a); }},
        {{"tau_star_closed", "X∖A ∈ τ*", point}, [](const Instance& s) { return s.ctx->star_top.is_closed(s.a); }},
        {{"tau_sharp_open", "A ∈ τ♯", point}, [](const Instance& s) { return s.ctx->sharp_top.is_open(s.a); }},
        {{"tau_sharp_closed", "X∖A ∈ τ♯", point}, [](const Instance& s) { return s.ctx->sharp_top.is_closed(s.a); }},
        {{"in_ideal", "A ∈ I", point}, [](const Instance& s) { return s.id().contains(s.a); }},
        {{"in_annihilator", "A ∈ Ann(I)", point}, [](const Instance& s) { return s.ctx->ann.contains(s.a); }},
        {{"dense", "cl(A) = X", point}, [](const Instance& s) { return static_cast<bool>(is_dense(s.a, s.tau())); }},
        {{"star_empty", "A* = ∅", point}, [](const Instance& s) { return s.ctx->star[s.ix(s.a)].empty(); }},
        {{"sharp_empty", "A♯ = ∅", point}, [](const Instance& s) { return s.ctx->sharp[s.ix(s.a)].empty(); }},
        {{"star_is_closure", "A* = cl(A)", point},
         [](const Instance& s) { return s.ctx->star[s.ix(s.a)] == s.ctx->cl[s.ix(s.a)]; }},
        {{"sharp_is_closure", "A♯ = cl(A)", point},
         [](const Instance& s) { return s.ctx->sharp[s.ix(s.a)] == s.ctx->cl[s.ix(s.a)]; }},
        {{"continuous", "f: (X, τ) → (Y, σ) is continuous", maps},
         [](const Instance& s) { return static_cast<bool>(is_continuous(*s.map, s.tau(), *s.sigma)); }},
        {{"star_continuous", "f is *-continuous", maps},
         [](const Instance& s) { return static_cast<bool>(is_continuous(*s.map, s.ctx->star_top, *s.sigma)); }},
        {{"sharp_continuous", "f is ♯-continuous", maps},
         [](const Instance& s) { return static_cast<bool>(is_continuous(*s.map, s.ctx->sharp_top, *s.sigma)); }},
        {{"quotient_reversed", "(I:K) ⊆ (I:J)", pair},
         [](const Instance& s) {
             return ideal_quotient(s.id(), *s.k).family().subset_of(ideal_quotient(s.id(), *s.j).family());
         }},
        {{"family_included", "J ⊆ K", pair}, [](const Instance& s) { return s.j->subset_of(*s.k); }},
        {{"quotient_is_ideal", "(I:J) = I", single}, [](const Instance& s) { return ideal_quotient(s.id(), *s.j) == s.id(); }},
        {{"full_in_family", "X ∈ J", single}, [](const Instance& s) { return s.j->contains(s.full()); }},
        {{"family_in_ideal", "J ⊆ I", single}, [](const Instance& s) { return s.j->subset_of(s.id().family()); }},
        {{"quotient_is_full", "(I:J) = 2^X", single},
         [](const Instance& s) { return ideal_is_full(ideal_quotient(s.id(), *s.j)); }},
    };
    return cases;
}

const TheoremCase& find_case(std::string_view id) {
    for (const auto& c : registry())
        if (c.info.id == id) return c;
    throw UnknownTheorem("no theorem registered as '" + std::string(id) + "'");
}

const PredicateCase& find_predicate(std::string_view name) {
    for (const auto& p : predicates())
        if (p.info.name == name) return p;
    throw std::invalid_argument("no predicate registered as '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Search engine

/// Lowest index in [0, count) for which `fails` is true, scanning in blocks across workers.
std::optional<std::uint64_t> first_failure(std::uint64_t count, unsigned workers,
                                           const std::function<bool(std::uint64_t)>& fails) {
    constexpr std::uint64_t kBlock = 64;
    constexpr auto kNone = std::numeric_limits<std::uint64_t>::max();
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> best{kNone};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto work = [&] {
        try {
            while (true) {
                const auto start = next.fetch_add(kBlock);
                if (start >= count || start >= best.load()) return;
                const auto end = std::min(count, start + kBlock);
                for (auto i = start; i < end && i < best.load(); ++i) {
                    if (fails(i)) {
                        auto cur = best.load();
                        while (i < cur && !best.compare_exchange_weak(cur, i)) {
                        }
                        break;
                    }
                }
            }
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            best.store(0);
        }
    };

    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    if (error) std::rethrow_exception(error);
    if (best.load() == kNone) return std::nullopt;
    return best.load();
}

struct SearchPlan {
    std::string id;
    int bound;
    std::vector<Axis> axes;
    bool want_exhaustive;
    std::uint64_t exhaustive_limit;
    std::uint64_t samples;
    std::uint64_t seed;
    unsigned workers;
    SearchStatus on_success;
};

SearchOutcome search(const SearchPlan& plan, const Check& check) {
    const auto started = std::chrono::steady_clock::now();
    Domain domain(plan.bound, plan.axes);
    SearchOutcome out;
    out.id = plan.id;
    out.bound = plan.bound;
    out.seed = plan.seed;
    out.domain_size = domain.size();

    const bool exhaustive = plan.want_exhaustive && domain.size() <= plan.exhaustive_limit;
    out.mode = exhaustive ? SearchMode::Exhaustive : SearchMode::Sampled;

    std::vector<std::vector<std::uint64_t>> draws;
    std::uint64_t count = 0;
    if (exhaustive) {
        domain.precompute_contexts();
        count = domain.size();
    } else {
        std::mt19937_64 rng(plan.seed);
        draws.reserve(plan.samples);
        for (std::uint64_t k = 0; k < plan.samples; ++k) {
            std::vector<std::uint64_t> c;
            for (auto size : domain.sizes()) c.push_back(std::uniform_int_distribution<std::uint64_t>(0, size - 1)(rng));
            draws.push_back(std::move(c));
        }
        count = draws.size();
    }
    auto instance_at = [&](std::uint64_t i) {
        return domain.make(exhaustive ? domain.coords_of(i) : draws[i]);
    };

    const unsigned workers = plan.workers == 0 ? default_workers() : plan.workers;
    const auto hit = first_failure(count, workers, [&](std::uint64_t i) { return check(instance_at(i)).has_value(); });
    if (hit) {
        const Instance inst = instance_at(*hit);
        out.status = SearchStatus::Counterexample;
        out.instances = *hit + 1;
        out.failure = check(inst);
        out.counterexample = print_space(to_document(inst, plan.axes));
    } else {
        out.status = plan.on_success;
        out.instances = count;
    }
    out.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - started);
    return out;
}

}  // namespace

std::string_view to_string(Axis axis) noexcept {
    switch (axis) {
        case Axis::Topology: return "topology";
        case Axis::Ideal: return "ideal";
        case Axis::IdealB: return "ideal2";
        case Axis::SubsetA: return "A";
        case Axis::SubsetB: return "B";
        case Axis::FamilyJ: return "J";
        case Axis::FamilyK: return "K";
        case Axis::Codomain: return "map";
    }
    return "?";
}

std::string_view to_string(SearchMode mode) noexcept {
    return mode == SearchMode::Exhaustive ? "exhaustive" : "sampled";
}

std::string_view to_string(SearchStatus status) noexcept {
    switch (status) {
        case SearchStatus::Verified: return "verified";
        case SearchStatus::Counterexample: return "counterexample";
        case SearchStatus::Exhausted: return "exhausted";
    }
    return "?";
}

std::optional<SearchMode> parse_search_mode(std::string_view text) noexcept {
    if (text == "exhaustive") return SearchMode::Exhaustive;
    if (text == "sampled") return SearchMode::Sampled;
    return std::nullopt;
}

const std::vector<TheoremInfo>& theorem_catalogue() {
    static const std::vector<TheoremInfo> infos = [] {
        std::vector<TheoremInfo> out;
        for (const auto& c : registry()) out.push_back(c.info);
        return out;
    }();
    return infos;
}

const std::vector<PredicateInfo>& predicate_catalogue() {
    static const std::vector<PredicateInfo> infos = [] {
        std::vector<PredicateInfo> out;
        for (const auto& p : predicates()) out.push_back(p.info);
        return out;
    }();
    return infos;
}

std::string SearchOutcome::summary_line() const {
    return "id=" + id + " status=" + std::string(to_string(status)) + " instances=" + std::to_string(instances) +
           " seed=" + std::to_string(seed) + " mode=" + std::string(to_string(mode)) + " bound=" + std::to_string(bound);
}

std::string SearchOutcome::to_json(bool include_timing) const {
    nlohmann::ordered_json j;
    j["id"] = id;
    j["status"] = to_string(status);
    j["bound"] = bound;
    j["mode"] = to_string(mode);
    j["seed"] = seed;
    j["instances"] = instances;
    j["domain_size"] = domain_size;
    j["failure"] = failure ? nlohmann::ordered_json(*failure) : nlohmann::ordered_json(nullptr);
    j["counterexample"] = counterexample ? nlohmann::ordered_json(*counterexample) : nlohmann::ordered_json(nullptr);
    if (include_timing) j["elapsed_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
    return j.dump();
}

bool operator==(const SearchOutcome& a, const SearchOutcome& b) {
    return a.id == b.id && a.status == b.status && a.bound == b.bound && a.mode == b.mode && a.seed == b.seed &&
           a.instances == b.instances && a.domain_size == b.domain_size && a.failure == b.failure &&
           a.counterexample == b.counterexample;
}

unsigned default_workers() {
    if (const char* env = std::getenv("ITOP_WORKERS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1 && v <= 256) return static_cast<unsigned>(v);
    }
    return 1;
}

SearchOutcome run_theorem(std::string_view id, int bound, const SearchOptions& options) {
    const auto& c = find_case(id);
    if (!c.info.in_scope) throw OutOfScope(c.info.id + " has no finite instance: " + c.info.note);
    if (bound < 1) throw CapExceeded("bound must be at least 1");
    if (options.mode == SearchMode::Exhaustive && bound > 4) throw CapExceeded("exhaustive runs are capped at bound 4");
    if (bound > kMaxBound) throw CapExceeded("sampled runs are capped at bound 5");
    SearchPlan plan{c.info.id,      bound,           c.info.axes,     options.mode == SearchMode::Exhaustive,
                    kExhaustiveCap, options.samples, options.seed,    options.workers,
                    SearchStatus::Verified};
    return search(plan, c.check);
}

SearchOutcome falsify(std::string_view antecedent, std::string_view consequent, int bound, std::uint64_t budget,
                      std::uint64_t seed, unsigned workers) {
    const auto& ante = find_predicate(antecedent);
    const auto& cons = find_predicate(consequent);
    if (ante.info.axes != cons.info.axes)
        throw std::invalid_argument("'" + ante.info.name + "' and '" + cons.info.name +
                                    "' quantify over different objects");
    if (bound < 1) throw CapExceeded("bound must be at least 1");
    if (bound > kMaxBound) throw CapExceeded("falsify is capped at bound 5");
    if (budget == 0) throw std::invalid_argument("budget must be positive");
    SearchPlan plan{ante.info.name + "=>" + cons.info.name, bound, ante.info.axes, true, budget, budget, seed, workers,
                    SearchStatus::Exhausted};
    const Check check = [&](const Instance& s) -> Fail {
        if (ante.test(s) && !cons.test(s)) return ante.info.description + " holds but " + cons.info.description + " fails";
        return {};
    };
    return search(plan, check);
}

std::optional<std::string> replay_theorem(std::string_view id, const SpaceDocument& doc) {
    const auto& c = find_case(id);
    if (!c.info.in_scope) throw OutOfScope(c.info.id + " has no finite instance");
    return c.check(from_document(doc, c.info.axes));
}

bool replay_implication(std::string_view antecedent, std::string_view consequent, const SpaceDocument& doc) {
    const auto& ante = find_predicate(antecedent);
    const auto& cons = find_predicate(consequent);
    if (ante.info.axes != cons.info.axes)
        throw std::invalid_argument("predicates quantify over different objects");
    const Instance inst = from_document(doc, ante.info.axes);
    return ante.test(inst) && !cons.test(inst);
}

}  // namespace itop
