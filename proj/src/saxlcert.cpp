#include "saxl/saxlcert.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "saxl/counting.hpp"

namespace saxl {

const char* family_name(Family f) {
    switch (f) {
        case Family::Staircase: return "staircase";
        case Family::ChoppedSquare: return "chopped";
        case Family::Caret: return "caret";
    }
    throw std::logic_error("family_name: bad enum value");
}

Family family_from_name(const std::string& name) {
    if (name == "staircase") return Family::Staircase;
    if (name == "chopped") return Family::ChoppedSquare;
    if (name == "caret") return Family::Caret;
    throw std::invalid_argument("unknown family \"" + name +
                                "\" (expected staircase, chopped or caret)");
}

Partition family_shape(Family f, int k) {
    switch (f) {
        case Family::Staircase: return staircase(k);
        case Family::ChoppedSquare: return chopped_square(k);
        case Family::Caret: return caret(k);
    }
    throw std::logic_error("family_shape: bad enum value");
}

namespace {

// Largest hook length of the shape, h_11 = first part + rows - 1.
long long top_hook(const Partition& p) {
    return p.empty() ? 0 : p.first() + p.length() - 1;
}

}  // namespace

Certificate certify(const Partition& lambda, const Partition& mu) {
    if (!is_self_conjugate(mu))
        throw std::invalid_argument("certify: mu must be self-conjugate");
    if (lambda.n() != mu.n())
        throw std::invalid_argument("certify: lambda and mu must partition the same n");
    Certificate cert;
    cert.lambda = lambda;
    cert.mu = mu;
    cert.hook_class = principal_hooks(mu);
    if (!cert.hook_class.hooks.empty() && top_hook(lambda) < cert.hook_class.hooks[0]) {
        cert.value = 0;  // the class's top part cannot be removed from lambda
    } else {
        cert.value = mn_char(lambda, cert.hook_class.as_partition());
    }
    cert.certified = cert.value != 0;
    return cert;
}

std::vector<Certificate> certify_all(const Partition& mu) {
    if (!is_self_conjugate(mu))
        throw std::invalid_argument("certify_all: mu must be self-conjugate");
    PrincipalHooks hooks = principal_hooks(mu);
    Partition cls = hooks.as_partition();
    ClassEvaluator ev(cls);
    long long top = hooks.hooks.empty() ? 0 : hooks.hooks[0];
    std::vector<Certificate> certs;
    for_each_partition(mu.n(), [&](const Partition& lambda) {
        Certificate cert;
        cert.lambda = lambda;
        cert.mu = mu;
        cert.hook_class = hooks;
        cert.value = (top_hook(lambda) < top) ? CharValue(0) : ev.value(lambda);
        cert.certified = cert.value != 0;
        certs.push_back(std::move(cert));
    });
    return certs;
}

std::vector<Partition> certified_phi(const Partition& mu) {
    if (!is_self_conjugate(mu))
        throw std::invalid_argument("certified_phi: mu must be self-conjugate");
    PrincipalHooks hooks = principal_hooks(mu);
    Partition cls = hooks.as_partition();
    ClassEvaluator ev(cls);
    long long top = hooks.hooks.empty() ? 0 : hooks.hooks[0];
    std::vector<Partition> out;
    for_each_partition(mu.n(), [&](const Partition& lambda) {
        if (top_hook(lambda) < top) return;
        if (ev.value(lambda) != 0) out.push_back(lambda);
    });
    return out;
}

CharValue closed_form_hook(Family f, int k, long long ell) {
    Partition mu = family_shape(f, k);
    long long n = mu.n();
    if (ell < 0 || ell > n - 1)
        throw std::invalid_argument("closed_form_hook: row index out of range");
    std::vector<int> hooks = principal_hooks(mu).hooks;
    int s = hooks.back();
    std::vector<int> rest(hooks.begin(), hooks.end() - 1);
    CountTable table = pi_prime_set_table(rest);
    CharValue v = 0;
    for (int i = 0; i < s; ++i) {
        if (i % 2 == 0)
            v += table.at(ell - i);
        else
            v -= table.at(ell - i);
    }
    return v;
}

CharValue closed_form_two_row(Family f, int k, long long ell) {
    Partition mu = family_shape(f, k);
    long long n = mu.n();
    if (ell < 0 || 2 * ell > n)
        throw std::invalid_argument("closed_form_two_row: row index out of range");
    CountTable table = pi_prime_set_table(principal_hooks(mu).hooks);
    return table.at(ell) - table.at(ell - 1);
}

CharValue near_shape_char(const Partition& lambda, const Partition& cls) {
    if (lambda.length() <= 3) return eval_expansion(jacobi_trudi_rows(lambda), cls);
    if (durfee(lambda) == 2) return eval_expansion(giambelli_durfee2(lambda), cls);
    throw std::invalid_argument(
        "near_shape_char: shape fits neither the three-row nor the Durfee-2 profile");
}

namespace {

// All partitions that consist of a single border strip of size s.
std::vector<Partition> strip_hooks(int s) {
    std::vector<Partition> hooks;
    for (int leg = 0; leg < s; ++leg) {
        std::vector<int> v{s - leg};
        v.insert(v.end(), leg, 1);
        hooks.push_back(Partition(std::move(v)));
    }
    return hooks;
}

// One chain step: wrap each shape in a new outer rim one cell wider on
// both ends, then append `extra` more rim cells split between the first
// row (r cells) and the first column (extra - r cells).
std::vector<Partition> extend_members(const std::vector<Partition>& members, int extra) {
    std::vector<Partition> next;
    next.reserve(members.size() * (extra + 1));
    for (const Partition& p : members) {
        for (int r = 0; r <= extra; ++r) {
            int c = extra - r;
            std::vector<int> v;
            v.reserve(p.length() + 2 + c);
            v.push_back(p.first() + 1 + r);
            for (int x = 0; x < p.length(); ++x) v.push_back(p.parts()[x] + 1);
            v.insert(v.end(), c, 1);
            next.push_back(Partition(std::move(v)));
        }
    }
    return next;
}

// Run the chain so that successive outer rims have the given sizes.
std::vector<Partition> strip_chain(const std::vector<int>& sizes_increasing) {
    std::vector<Partition> members = strip_hooks(sizes_increasing[0]);
    for (size_t i = 1; i < sizes_increasing.size(); ++i) {
        int extra = sizes_increasing[i] - sizes_increasing[i - 1] - 2;
        if (extra < 0)
            throw std::invalid_argument("strip chain: rim sizes must grow by at least 2");
        members = extend_members(members, extra);
    }
    return members;
}

}  // namespace

std::vector<Partition> exp_family(Family f, int k) {
    if (k < 1) throw std::invalid_argument("exp_family: k must be positive");
    std::vector<Partition> members;
    if (f == Family::Staircase) {
        int ck;
        if (k % 2 == 1) {
            members = {Partition({1})};
            ck = 1;
        } else {
            members = {staircase(2)};
            ck = 2;
        }
        for (; ck < k; ck += 2) members = extend_members(members, 2);
    } else if (f == Family::Caret) {
        members = {caret(1)};
        for (int ck = 1; ck < k; ++ck) members = extend_members(members, 4);
    } else {
        throw std::invalid_argument("exp_family: no chain construction for this family");
    }
    const Partition mu = family_shape(f, k);
    const std::vector<int> hooks = principal_hooks(mu).hooks;
    for (const Partition& p : members) {
        internal_check(p.n() == mu.n(), "exp_family: member has wrong size");
        internal_check(top_hook(p) == hooks[0], "exp_family: member has wrong top hook");
    }
    return members;
}

std::vector<int> vanishing_weights(Family f, int k) {
    std::vector<int> hooks = principal_hooks(family_shape(f, k)).hooks;
    if (hooks.size() < 2)
        throw std::invalid_argument("vanishing_weights: need at least two principal hooks");
    hooks.front() -= 2;
    hooks.back() += 2;
    for (size_t i = 0; i + 1 < hooks.size(); ++i)
        if (hooks[i] <= hooks[i + 1])
            throw std::invalid_argument(
                "vanishing_weights: hook gaps too small for this family/k");
    return hooks;
}

std::vector<Partition> vanishing_family(Family f, int k) {
    std::vector<int> weights = vanishing_weights(f, k);
    std::reverse(weights.begin(), weights.end());
    std::vector<Partition> members = strip_chain(weights);
    const Partition mu = family_shape(f, k);
    for (const Partition& p : members) {
        internal_check(p.n() == mu.n(), "vanishing_family: member has wrong size");
        internal_check(top_hook(p) == weights.back(),
                       "vanishing_family: member has wrong top hook");
    }
    return members;
}

VerificationReport verify_conjecture(Family f, int k, bool exact, const RunConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.family = f;
    rep.k = k;
    rep.exact_mode = exact;
    const Partition mu = family_shape(f, k);
    rep.n = mu.n();

    std::vector<Certificate> certs = certify_all(mu);
    rep.total = (long long)certs.size();
    for (const Certificate& c : certs) {
        if (c.certified) {
            ++rep.certified;
        } else {
            rep.inconclusive.push_back(c.lambda);
            if (positivity_rules(c.lambda, mu).verdict == PositivityVerdict::ForcedPositive)
                ++rep.rule_covered;
        }
    }

    if (exact) {
        double cells = (double)rep.total * (double)rep.total;
        if (cells > (double)cfg.cell_budget)
            throw BudgetExceeded("verify_conjecture: exact mode needs about " +
                                 std::to_string((long long)cells) +
                                 " table cells, over the budget of " +
                                 std::to_string(cfg.cell_budget));
        TensorSquareSpectrum sp = tensor_square(mu, cfg.workers);
        rep.exact_checked = rep.total;
        for (size_t i = 0; i < sp.shapes.size(); ++i) {
            internal_check(!(certs[i].certified && sp.mult[i] == 0),
                           "certificate soundness: certified shape missing from spectrum");
            if (sp.mult[i] == 0) rep.missing.push_back(sp.shapes[i]);
        }
        rep.conjecture_holds = rep.missing.empty();
    } else {
        rep.conjecture_holds = rep.inconclusive.empty();
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

ClosedFormScan closed_form_scan(Family f, int k, bool two_row) {
    ClosedFormScan scan;
    scan.family = f;
    scan.k = k;
    scan.two_row = two_row;
    const Partition mu = family_shape(f, k);
    const long long n = mu.n();
    ClassEvaluator ev(principal_hooks(mu).as_partition());
    const long long last = two_row ? n / 2 : n - 1;
    for (long long ell = 0; ell <= last; ++ell) {
        Partition lambda;
        CharValue predicted;
        if (two_row) {
            lambda = Partition({(int)(n - ell), (int)ell});
            predicted = closed_form_two_row(f, k, ell);
        } else {
            std::vector<int> v{(int)(n - ell)};
            v.insert(v.end(), ell, 1);
            lambda = Partition(std::move(v));
            predicted = closed_form_hook(f, k, ell);
        }
        if (ev.value(lambda) != predicted) scan.disagreements.push_back(ell);
    }
    scan.first_agreement = scan.disagreements.empty() ? 0 : scan.disagreements.back() + 1;
    return scan;
}

}  // namespace saxl
