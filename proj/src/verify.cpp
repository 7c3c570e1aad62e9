#include "tabstat/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <thread>

#include <json.hpp>

namespace tabstat {

namespace {

// Violation accumulator with an exact total and a capped sample.
struct Collector {
    explicit Collector(int cap) : cap_(cap) {}

    void instance(std::int64_t n = 1) { instances += n; }

    void violation(const std::string& instance_text, std::string expected, std::string actual) {
        ++total_violations;
        if (static_cast<int>(violations.size()) < cap_)
            violations.push_back({instance_text, std::move(expected), std::move(actual)});
    }

    template <typename T>
    void check_eq(const std::string& instance_text, const std::string& what, const T& expected,
                  const T& actual) {
        if (expected == actual) return;
        violation(instance_text, what + " = " + to_str(expected), what + " = " + to_str(actual));
    }

    VerificationReport finish(std::string theorem, std::string space) && {
        VerificationReport rep;
        rep.theorem = std::move(theorem);
        rep.space = std::move(space);
        rep.instances = instances;
        rep.total_violations = total_violations;
        rep.violations = std::move(violations);
        return rep;
    }

    std::int64_t instances = 0;
    std::int64_t total_violations = 0;
    std::vector<Violation> violations;

private:
    template <typename T>
    static std::string to_str(const T& v) {
        if constexpr (std::is_same_v<T, std::string>)
            return v;
        else if constexpr (std::is_same_v<T, GenPoly>)
            return v.str();
        else
            return std::to_string(v);
    }

    int cap_;
};

// Runs the task list (each returning a report fragment) across `workers`
// threads and merges the fragments in task order, so the outcome does not
// depend on the worker count.
VerificationReport run_tasks(std::string theorem, std::string space,
                             const std::vector<std::function<VerificationReport()>>& tasks,
                             const VerifyOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<VerificationReport> parts(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());

    if (opts.workers <= 1 || tasks.size() <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) parts[i] = tasks[i]();
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) return;
                try {
                    parts[i] = tasks[i]();
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        };
        std::vector<std::thread> pool;
        int count = std::min<int>(opts.workers, static_cast<int>(tasks.size()));
        pool.reserve(count);
        for (int w = 0; w < count; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        for (const auto& err : errors)
            if (err) std::rethrow_exception(err);
    }

    VerificationReport rep;
    rep.theorem = std::move(theorem);
    rep.space = std::move(space);
    for (const VerificationReport& part : parts) {
        rep.instances += part.instances;
        rep.total_violations += part.total_violations;
        for (const Violation& v : part.violations) {
            if (static_cast<int>(rep.violations.size()) >= opts.violation_cap) break;
            rep.violations.push_back(v);
        }
    }
    rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

VerificationReport timed(std::string theorem, std::string space,
                         const std::function<void(Collector&)>& body, const VerifyOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    Collector col(opts.violation_cap);
    body(col);
    VerificationReport rep = std::move(col).finish(std::move(theorem), std::move(space));
    rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::string stats_line(const StatBundle& s) {
    return "(maj,inv,quinv)=(" + std::to_string(s.maj) + "," + std::to_string(s.inv) + "," +
           std::to_string(s.quinv) + ")";
}

std::string vec_str(const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

// Multiset equality of serialized fillings; used for bijectivity onto a class.
bool same_multiset(std::vector<std::string> lhs, std::vector<std::string> rhs) {
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    return lhs == rhs;
}

void t1_class_body(const Filling& rep_filling, const VerifyOptions& opts, Collector& col) {
    GenPoly p_inv, p_quinv;
    std::vector<std::string> members, images;
    for_each_in_row_class(rep_filling, opts.budget, [&](const Filling& f) {
        col.instance();
        std::int64_t m = maj(f), i = inv(f), qv = quinv(f);
        p_inv.add_term(Monomial{static_cast<int>(m), static_cast<int>(i), 0}, 1);
        p_quinv.add_term(Monomial{static_cast<int>(m), static_cast<int>(qv), 0}, 1);
        Filling img = varphi(f);
        members.push_back(serialize_filling_line(f));
        images.push_back(serialize_filling_line(img));
        std::int64_t im = maj(img), iq = quinv(img);
        if (im != m || iq != i)
            col.violation(serialize_filling_line(f),
                          "(quinv,maj)(varphi) = (" + std::to_string(i) + "," + std::to_string(m) + ")",
                          "(quinv,maj)(varphi) = (" + std::to_string(iq) + "," + std::to_string(im) + ")");
    });
    if (!(p_inv == p_quinv))
        col.violation(serialize_filling_line(rep_filling), "inv polynomial " + p_inv.str(),
                      "quinv polynomial " + p_quinv.str());
    if (!same_multiset(members, images))
        col.violation(serialize_filling_line(rep_filling), "varphi image multiset equals the class",
                      "image multiset differs");
}

void t2_class_body(const Filling& rep_filling, const VerifyOptions& opts, Collector& col) {
    GenPoly triple;
    bool rect = rep_filling.shape().is_rectangle();
    std::vector<std::string> members, images;
    for_each_in_row_class(rep_filling, opts.budget, [&](const Filling& f) {
        col.instance();
        StatBundle s = stat_bundle(f);
        triple.add_term(
            Monomial{static_cast<int>(s.maj), static_cast<int>(s.inv), static_cast<int>(s.quinv)}, 1);
        if (rect) {
            Filling img = theta(f);
            members.push_back(serialize_filling_line(f));
            images.push_back(serialize_filling_line(img));
            StatBundle si = stat_bundle(img);
            if (si.inv != s.quinv || si.quinv != s.inv || si.maj != s.maj)
                col.violation(serialize_filling_line(f), "(quinv,inv,maj)(theta) " + stats_line(s),
                              "(inv,quinv,maj)(theta) " + stats_line(si));
        }
    });
    GenPoly swapped = triple.swap_t_u();
    if (!(triple == swapped)) {
        // Report the monomials whose coefficients move under t <-> u.
        for (const auto& [m, c] : triple.terms()) {
            auto it = swapped.terms().find(m);
            if (it == swapped.terms().end() || it->second != c) {
                GenPoly lhs = GenPoly::term(m, c);
                GenPoly rhs = (it == swapped.terms().end()) ? GenPoly() : GenPoly::term(m, it->second);
                col.violation(serialize_filling_line(rep_filling),
                              "coefficient of " + lhs.str() + " preserved under t<->u",
                              "t<->u image has " + rhs.str());
            }
        }
        for (const auto& [m, c] : swapped.terms())
            if (triple.terms().find(m) == triple.terms().end())
                col.violation(serialize_filling_line(rep_filling),
                              "no extra term under t<->u",
                              "t<->u image adds " + GenPoly::term(m, c).str());
    }
    if (rect && !same_multiset(members, images))
        col.violation(serialize_filling_line(rep_filling), "theta image multiset equals the class",
                      "image multiset differs");
}

void phi_suite_body(const Partition& shape, int max_entry, Collector& col) {
    for_each_filling(shape, max_entry, [&](const Filling& f) {
        std::vector<int> x = ndes_vector(f);
        StatBundle s = stat_bundle(f);
        for (int i = 1; i + 1 <= shape.num_cols(); ++i) {
            if (!shape.compatible_column(i)) continue;
            col.instance();
            std::string line = serialize_filling_line(f) + " [i=" + std::to_string(i) + "]";
            Filling g = phi(f, i);
            int delta = x[i] - x[i - 1];
            col.check_eq(line, "maj(phi_i)", s.maj, maj(g));
            col.check_eq(line, "inv(phi_i)", s.inv + delta, inv(g));
            col.check_eq(line, "quinv(phi_i)", s.quinv + delta, quinv(g));
            std::vector<int> xs = x;
            std::swap(xs[i - 1], xs[i]);
            col.check_eq(line, "ndes(phi_i)", vec_str(xs), vec_str(ndes_vector(g)));
            if (!(phi(g, i) == f))
                col.violation(line, "phi_i an involution", "phi_i(phi_i(f)) != f");
            if (!row_equivalent(f, g))
                col.violation(line, "phi_i preserves row multisets", "row multisets differ");
        }
    });
}

void gamma_suite_body(const Partition& shape, int max_entry, std::int64_t budget, Collector& col) {
    for_each_class_rep(shape, max_entry, [&](const Filling& rep_filling) {
        std::vector<std::string> members, images;
        for_each_in_row_class(rep_filling, budget, [&](const Filling& f) {
            col.instance();
            std::string line = serialize_filling_line(f);
            Filling g = gamma(f);
            members.push_back(line);
            images.push_back(serialize_filling_line(g));
            if (!row_equivalent(f, g)) col.violation(line, "gamma(f) ~ f", "row multisets differ");
            col.check_eq(line, "maj(gamma)", maj(f), maj(g));
            col.check_eq(line, "quinv(gamma) - kappa(gamma)", inv(f), quinv(g) - kappa(g));
            if (!shape.empty()) {
                auto top = f.rows().back();
                std::reverse(top.begin(), top.end());
                if (top != g.rows().back())
                    col.violation(line, "top rows mutually reversed", "top row mismatch");
                RectBlock first = rectangle_decomposition(shape).front();
                std::vector<int> lhs = ndes_vector(extract_block(f, first));
                std::vector<int> rhs = ndes_vector(split_reverse_join(extract_block(g, first)));
                col.check_eq(line, "ndes of leftmost block", vec_str(lhs), vec_str(rhs));
            }
        });
        if (!same_multiset(members, images))
            col.violation(serialize_filling_line(rep_filling),
                          "gamma image multiset equals the class", "image multiset differs");
    });
}

void theta_suite_body(const Partition& shape, int max_entry, std::int64_t budget, Collector& col) {
    for_each_class_rep(shape, max_entry, [&](const Filling& rep_filling) {
        std::vector<std::string> members, images;
        for_each_in_row_class(rep_filling, budget, [&](const Filling& f) {
            col.instance();
            std::string line = serialize_filling_line(f);
            StatBundle s = stat_bundle(f);
            Filling g = theta(f);
            members.push_back(line);
            images.push_back(serialize_filling_line(g));
            StatBundle si = stat_bundle(g);
            if (si.inv != s.quinv || si.quinv != s.inv || si.maj != s.maj)
                col.violation(line, "(inv,quinv,maj)(theta) swaps inv/quinv " + stats_line(s),
                              stats_line(si));
            col.check_eq(line, "ndes(theta)", vec_str(s.ndes), vec_str(si.ndes));
            if (!row_equivalent(f, g)) col.violation(line, "theta(f) ~ f", "row multisets differ");
        });
        if (!same_multiset(members, images))
            col.violation(serialize_filling_line(rep_filling),
                          "theta image multiset equals the class", "image multiset differs");
    });
}

void macdonald_body(const Partition& shape, int vars, std::int64_t budget, Collector& col) {
    ContentPoly with_inv = macdonald_poly(shape, vars, TripleStat::Inv, budget);
    ContentPoly with_quinv = macdonald_poly(shape, vars, TripleStat::Quinv, budget);
    mpz_class count;
    mpz_ui_pow_ui(count.get_mpz_t(), static_cast<unsigned long>(vars),
                  static_cast<unsigned long>(shape.cells()));
    col.instance(count.get_si());
    std::string inst = "shape " + shape.str() + ", " + std::to_string(vars) + " variables";
    if (!(with_inv == with_quinv))
        col.violation(inst, "inv and quinv content polynomials equal", "they differ");
    // Symmetry: swapping any two variable indices permutes the keys only.
    for (int a = 0; a < vars; ++a) {
        for (int b = a + 1; b < vars; ++b) {
            ContentPoly permuted;
            permuted.vars = vars;
            for (const auto& [content, poly] : with_inv.entries) {
                std::vector<int> key = content;
                std::swap(key[a], key[b]);
                permuted.entries[key] = poly;
            }
            if (!(permuted == with_inv))
                col.violation(inst,
                              "symmetric under exchanging variables " + std::to_string(a + 1) + "," +
                                  std::to_string(b + 1),
                              "not symmetric");
        }
    }
}

void invq_class_body(const Filling& rep_filling, int max_entry, std::int64_t budget, Collector& col) {
    col.instance();
    std::string line = serialize_filling_line(rep_filling);
    ClassPolyWeights inv_w{true, StatVar::T, StatVar::None};
    ClassPolyWeights quinv_w{true, StatVar::None, StatVar::T};
    GenPoly by_inv = class_poly(rep_filling, inv_w, budget).substitute_q1();
    GenPoly by_quinv = class_poly(rep_filling, quinv_w, budget).substitute_q1();
    GenPoly product = GenPoly::constant(1);
    for (const auto& row : rep_filling.row_class_signature()) {
        std::vector<int> mult(max_entry, 0);
        for (int v : row) {
            detail::require(v <= max_entry, "invq: entry exceeds alphabet");
            ++mult[v - 1];
        }
        product = product * t_multinomial(mult);
    }
    col.check_eq(line, "inv polynomial at q=1 vs multinomial product", product, by_inv);
    col.check_eq(line, "quinv polynomial at q=1 vs multinomial product", product, by_quinv);
}

void transpose_maj_class_body(const Filling& rep_filling, std::int64_t budget, Collector& col) {
    col.instance();
    GenPoly by_inv, by_tmaj;
    for_each_in_row_class(rep_filling, budget, [&](const Filling& f) {
        by_inv.add_term(Monomial{0, static_cast<int>(inv(f)), 0}, 1);
        by_tmaj.add_term(Monomial{0, static_cast<int>(maj(transpose(f))), 0}, 1);
    });
    col.check_eq(serialize_filling_line(rep_filling), "sum t^inv vs sum t^maj(transpose)", by_inv,
                 by_tmaj);
}

void l51_body(const Filling& f, Collector& col) {
    col.instance();
    int n = f.shape().num_cols();
    Filling rev = split_reverse_join(f);
    std::vector<int> x = ndes_vector(f);
    std::int64_t rhs = 0;
    for (int i = 1; i <= n; ++i) rhs += static_cast<std::int64_t>(x[i - 1]) * (n - 2 * i + 1);
    std::string line = serialize_filling_line(f);
    col.check_eq(line, "quinv(f) - inv(f^r)", rhs, quinv(f) - inv(rev));
    col.check_eq(line, "inv(f) - quinv(f^r)", rhs, inv(f) - quinv(rev));
}

void l52_body(const Filling& f, Collector& col) {
    const Partition& shape = f.shape();
    for (int i = 1; i + 1 <= shape.num_cols(); ++i) {
        if (!shape.compatible_column(i)) continue;
        int top = shape.col_height(i);
        ExtValue a = f.at(top, i), b = f.at(top, i + 1);
        // The cited law describes flips anchored at the topmost row; with an
        // equal top pair the modified operator starts lower and the law does
        // not apply (nor does that case arise inside the bijections).
        if (a == b) continue;
        col.instance();
        std::string line = serialize_filling_line(f) + " [i=" + std::to_string(i) + "]";
        FlipResult fr = rho_top(f, i);
        std::int64_t delta = (a > b ? 1 : 0) - (a < b ? 1 : 0);
        col.check_eq(line, "maj(rho_i)", maj(f), maj(fr.filling));
        col.check_eq(line, "quinv(rho_i)", quinv(f) + delta, quinv(fr.filling));
    }
}

void l53_body(const Filling& f, Collector& col) {
    const Partition& shape = f.shape();
    for (int i = 1; i + 1 <= shape.num_cols(); ++i) {
        if (!shape.compatible_column(i)) continue;
        for (int r = 1; r <= shape.col_height(i); ++r) {
            FlipResult fr = rho(f, i, r);
            if (fr.identity) continue;
            int k = fr.start_row, h = fr.end_row;
            ExtValue a = f.extended(k + 1, i), b = f.extended(k + 1, i + 1);
            ExtValue c = f.at(k, i), d = f.at(k, i + 1);
            int qa = triple_indicator(a, c, d), qb = triple_indicator(b, c, d);
            // The lemma's laws presuppose the indicator balance above the
            // starting row; epsilon guarantees it wherever a flip is used.
            if (qa != qb) continue;
            col.instance();
            std::string line =
                serialize_filling_line(f) + " [i=" + std::to_string(i) + ",r=" + std::to_string(r) + "]";
            ExtValue s = f.at(h, i), t = f.at(h, i + 1);
            ExtValue u = f.extended(h - 1, i), v = f.extended(h - 1, i + 1);
            int qs = triple_indicator(s, u, t), qv = triple_indicator(s, v, t);
            col.check_eq(line, "quinv(rho_i^r)", quinv(f) + (qa == 0 ? 1 : -1), quinv(fr.filling));
            col.check_eq(line, "maj(rho_i^r)", maj(f), maj(fr.filling));
            if (qs == qv)
                col.check_eq(line, "inv(rho_i^r)", inv(f) + (qs == 0 ? 1 : -1), inv(fr.filling));
        }
    }
}

void l63_body(const Filling& f, Collector& col) {
    const Partition& shape = f.shape();
    int n = shape.num_cols();
    int m = shape.length();
    if (m < 2) return;
    for (int i = 1; i + 1 <= n; ++i) {
        ExtValue a = f.at(m, i), b = f.at(m, i + 1);
        ExtValue c = f.at(m - 1, i), d = f.at(m - 1, i + 1);
        bool first = a < d && d < b && b <= c;
        bool second = a < c && c < b && b <= d;
        if (!first && !second) continue;
        col.instance();
        std::string line = serialize_filling_line(f) + " [i=" + std::to_string(i) + "]";
        Filling g = row_swap(f, i, m);
        if (first) {
            col.check_eq(line, "quinv(t_i)", quinv(f) + (n - i - 1), quinv(g));
            col.check_eq(line, "maj(t_i)", maj(f) - 1, maj(g));
        } else {
            col.check_eq(line, "quinv(t_i)", quinv(f) - (n - i + 1), quinv(g));
            col.check_eq(line, "maj(t_i)", maj(f) + 1, maj(g));
        }
    }
}

std::vector<Partition> rectangle_shapes(int max_side) {
    std::vector<Partition> shapes;
    for (int m = 1; m <= max_side; ++m)
        for (int n = 1; n <= max_side; ++n) shapes.push_back(Partition(std::vector<int>(m, n)));
    return shapes;
}

std::string entry_space(int max_entry) { return "entries 1.." + std::to_string(max_entry); }

}  // namespace

Theorem theorem_from_string(const std::string& name) {
    if (name == "T1") return Theorem::T1;
    if (name == "T2") return Theorem::T2;
    if (name == "phi") return Theorem::PhiSuite;
    if (name == "gamma") return Theorem::GammaSuite;
    if (name == "theta") return Theorem::ThetaSuite;
    if (name == "L5.1") return Theorem::L51;
    if (name == "L5.2") return Theorem::L52;
    if (name == "L5.3") return Theorem::L53;
    if (name == "L6.3") return Theorem::L63;
    if (name == "tables") return Theorem::Tables;
    if (name == "block-partition") return Theorem::BlockPartition;
    if (name == "invq") return Theorem::InvQ;
    if (name == "transpose-maj") return Theorem::TransposeMaj;
    if (name == "macdonald") return Theorem::Macdonald;
    throw DomainError("unknown theorem '" + name + "'");
}

std::string theorem_name(Theorem t) {
    switch (t) {
        case Theorem::T1: return "T1";
        case Theorem::T2: return "T2";
        case Theorem::PhiSuite: return "phi";
        case Theorem::GammaSuite: return "gamma";
        case Theorem::ThetaSuite: return "theta";
        case Theorem::L51: return "L5.1";
        case Theorem::L52: return "L5.2";
        case Theorem::L53: return "L5.3";
        case Theorem::L63: return "L6.3";
        case Theorem::Tables: return "tables";
        case Theorem::BlockPartition: return "block-partition";
        case Theorem::InvQ: return "invq";
        case Theorem::TransposeMaj: return "transpose-maj";
        case Theorem::Macdonald: return "macdonald";
    }
    throw DomainError("unknown theorem id");
}

VerificationReport check_T1_class(const Filling& f, const VerifyOptions& opts) {
    return timed("T1", "class of " + serialize_filling_line(f),
                 [&](Collector& col) { t1_class_body(f, opts, col); }, opts);
}

VerificationReport check_T2_class(const Filling& f, const VerifyOptions& opts) {
    return timed("T2", "class of " + serialize_filling_line(f),
                 [&](Collector& col) { t2_class_body(f, opts, col); }, opts);
}

VerificationReport check_T2_shape(const Partition& shape, int max_entry, const VerifyOptions& opts) {
    std::vector<std::function<VerificationReport()>> tasks;
    std::vector<Filling> reps;
    for_each_class_rep(shape, max_entry, [&reps](const Filling& f) { reps.push_back(f); });
    for (Filling& rep_filling : reps) {
        tasks.push_back([rep_filling = std::move(rep_filling), &opts]() {
            Collector col(opts.violation_cap);
            t2_class_body(rep_filling, opts, col);
            return std::move(col).finish("", "");
        });
    }
    return run_tasks("T2", "shape " + shape.str() + ", " + entry_space(max_entry), tasks, opts);
}

VerificationReport check_phi_suite(const Partition& shape, int max_entry, const VerifyOptions& opts) {
    return timed("phi", "shape " + shape.str() + ", " + entry_space(max_entry),
                 [&](Collector& col) { phi_suite_body(shape, max_entry, col); }, opts);
}

VerificationReport check_gamma_suite(const Partition& shape, int max_entry, const VerifyOptions& opts) {
    return timed("gamma", "shape " + shape.str() + ", " + entry_space(max_entry),
                 [&](Collector& col) { gamma_suite_body(shape, max_entry, opts.budget, col); }, opts);
}

VerificationReport check_theta_suite(const Partition& shape, int max_entry, const VerifyOptions& opts) {
    detail::require(shape.is_rectangle(), "theta suite: shape must be a rectangle");
    return timed("theta", "shape " + shape.str() + ", " + entry_space(max_entry),
                 [&](Collector& col) { theta_suite_body(shape, max_entry, opts.budget, col); }, opts);
}

VerificationReport check_macdonald(const Partition& shape, int vars, const VerifyOptions& opts) {
    return timed("macdonald", "shape " + shape.str() + ", " + std::to_string(vars) + " variables",
                 [&](Collector& col) { macdonald_body(shape, vars, opts.budget, col); }, opts);
}

VerificationReport check_tables(int max_value, const VerifyOptions& opts) {
    return timed("tables", "values 1.." + std::to_string(max_value), [&](Collector& col) {
        for (int av = 1; av <= max_value; ++av)
            for (int bv = 1; bv <= max_value; ++bv)
                for (int cv = 1; cv <= max_value; ++cv)
                    for (int dv = 1; dv <= max_value; ++dv) {
                        ExtValue a = ExtValue::fin(av), b = ExtValue::fin(bv);
                        ExtValue c = ExtValue::fin(cv), d = ExtValue::fin(dv);
                        bool table1 = (d >= a && a > b && b > c) || (d >= b && b >= a && a > c);
                        bool table2 = (c >= b && b > d && d > a);
                        if (!table1 && !table2) continue;
                        for (int zv = 1; zv <= max_value; ++zv) {
                            ExtValue z = ExtValue::fin(zv);
                            col.instance();
                            std::string inst = "(a,b,c,d,z)=(" + std::to_string(av) + "," +
                                               std::to_string(bv) + "," + std::to_string(cv) + "," +
                                               std::to_string(dv) + "," + std::to_string(zv) + ")";
                            int lhs = triple_indicator(a, c, z) + triple_indicator(b, d, z);
                            int rhs = triple_indicator(a, d, z) + triple_indicator(b, c, z);
                            if (table1)
                                col.check_eq(inst, "Q(a,c,z)+Q(b,d,z) vs Q(a,d,z)+Q(b,c,z)", rhs, lhs);
                            if (table2)
                                col.check_eq(inst, "Q(a,c,z)+Q(b,d,z)+1 vs Q(a,d,z)+Q(b,c,z)", rhs,
                                             lhs + 1);
                        }
                    }
    }, opts);
}

VerificationReport check_block_partition(int max_value, const VerifyOptions& opts) {
    return timed("block-partition", "values 1.." + std::to_string(max_value), [&](Collector& col) {
        Partition square({2, 2});
        for (int av = 1; av <= max_value; ++av)
            for (int bv = 1; bv <= max_value; ++bv)
                for (int cv = 1; cv <= max_value; ++cv)
                    for (int dv = 1; dv <= max_value; ++dv) {
                        col.instance();
                        Filling f(square, {{cv, dv}, {av, bv}});
                        std::string inst = serialize_filling_line(f);
                        DescentBlock blk;
                        try {
                            blk = classify_block(f, 1, 1);
                        } catch (const InternalError& e) {
                            col.violation(inst, "exactly one of A/B/C", e.what());
                            continue;
                        }
                        if (!blk.is_descent()) continue;
                        int qa = triple_indicator(blk.a, blk.c, blk.d);
                        int qb = triple_indicator(blk.b, blk.c, blk.d);
                        bool ab_kind = blk.kind == BlockKind::A || blk.kind == BlockKind::B;
                        if (ab_kind != (qa == qb))
                            col.violation(inst, "kind in {A,B} iff Q(a,c,d)=Q(b,c,d)",
                                          "classification disagrees with indicator");
                    }
    }, opts);
}

VerificationReport sweep(Theorem which, int max_size, int max_entry, bool rectangles_only,
                         const VerifyOptions& opts) {
    std::vector<Partition> shapes;
    for (const Partition& p : partitions_up_to(max_size))
        if (!rectangles_only || p.is_rectangle()) shapes.push_back(p);

    std::string space = std::string(rectangles_only ? "rectangle shapes" : "all shapes") +
                        " with at most " + std::to_string(max_size) + " cells, " +
                        entry_space(max_entry);

    std::vector<std::function<VerificationReport()>> tasks;
    auto add_class_tasks = [&](const std::function<void(const Filling&, Collector&)>& body) {
        for (const Partition& shape : shapes) {
            std::vector<Filling> reps;
            for_each_class_rep(shape, max_entry, [&reps](const Filling& f) { reps.push_back(f); });
            for (Filling& rep_filling : reps) {
                tasks.push_back([rep_filling = std::move(rep_filling), body, &opts]() {
                    Collector col(opts.violation_cap);
                    body(rep_filling, col);
                    return std::move(col).finish("", "");
                });
            }
        }
    };

    switch (which) {
        case Theorem::T1:
            add_class_tasks([&opts](const Filling& f, Collector& col) { t1_class_body(f, opts, col); });
            break;
        case Theorem::T2:
            add_class_tasks([&opts](const Filling& f, Collector& col) { t2_class_body(f, opts, col); });
            break;
        case Theorem::InvQ:
            add_class_tasks([max_entry, &opts](const Filling& f, Collector& col) {
                invq_class_body(f, max_entry, opts.budget, col);
            });
            break;
        case Theorem::TransposeMaj:
            add_class_tasks([&opts](const Filling& f, Collector& col) {
                transpose_maj_class_body(f, opts.budget, col);
            });
            break;
        case Theorem::PhiSuite:
            for (const Partition& shape : shapes)
                tasks.push_back([shape, max_entry, &opts]() {
                    Collector col(opts.violation_cap);
                    phi_suite_body(shape, max_entry, col);
                    return std::move(col).finish("", "");
                });
            break;
        case Theorem::GammaSuite:
            for (const Partition& shape : shapes)
                tasks.push_back([shape, max_entry, &opts]() {
                    Collector col(opts.violation_cap);
                    gamma_suite_body(shape, max_entry, opts.budget, col);
                    return std::move(col).finish("", "");
                });
            break;
        case Theorem::ThetaSuite:
            for (const Partition& shape : shapes) {
                if (!shape.is_rectangle()) continue;
                tasks.push_back([shape, max_entry, &opts]() {
                    Collector col(opts.violation_cap);
                    theta_suite_body(shape, max_entry, opts.budget, col);
                    return std::move(col).finish("", "");
                });
            }
            break;
        case Theorem::Macdonald:
            for (const Partition& shape : shapes)
                tasks.push_back([shape, max_entry, &opts]() {
                    Collector col(opts.violation_cap);
                    macdonald_body(shape, max_entry, opts.budget, col);
                    return std::move(col).finish("", "");
                });
            break;
        default:
            throw DomainError("theorem '" + theorem_name(which) + "' does not support a size sweep");
    }
    return run_tasks(theorem_name(which), space, tasks, opts);
}

VerificationReport sweep_rectangles(Theorem which, int max_side, int max_entry,
                                    const VerifyOptions& opts) {
    std::string space = "rectangles up to " + std::to_string(max_side) + "x" +
                        std::to_string(max_side) + ", " + entry_space(max_entry);
    std::vector<std::function<VerificationReport()>> tasks;
    for (const Partition& shape : rectangle_shapes(max_side)) {
        tasks.push_back([shape, which, max_entry, &opts]() {
            Collector col(opts.violation_cap);
            switch (which) {
                case Theorem::T2:
                    for_each_class_rep(shape, max_entry,
                                       [&](const Filling& f) { t2_class_body(f, opts, col); });
                    break;
                case Theorem::ThetaSuite:
                    theta_suite_body(shape, max_entry, opts.budget, col);
                    break;
                case Theorem::L51:
                    for_each_filling(shape, max_entry, [&](const Filling& f) { l51_body(f, col); });
                    break;
                case Theorem::L52:
                    for_each_filling(shape, max_entry, [&](const Filling& f) { l52_body(f, col); });
                    break;
                case Theorem::L53:
                    for_each_filling(shape, max_entry, [&](const Filling& f) { l53_body(f, col); });
                    break;
                case Theorem::L63:
                    for_each_filling(shape, max_entry, [&](const Filling& f) { l63_body(f, col); });
                    break;
                default:
                    throw DomainError("theorem '" + theorem_name(which) +
                                      "' does not support a rectangle sweep");
            }
            return std::move(col).finish("", "");
        });
    }
    return run_tasks(theorem_name(which), space, tasks, opts);
}

std::string report_text(const VerificationReport& rep) {
    std::string out;
    out += "theorem: " + rep.theorem + "\n";
    out += "space: " + rep.space + "\n";
    out += "instances: " + std::to_string(rep.instances) + "\n";
    out += "violations: " + std::to_string(rep.total_violations) + "\n";
    for (std::size_t i = 0; i < rep.violations.size(); ++i) {
        const Violation& v = rep.violations[i];
        out += "  [" + std::to_string(i + 1) + "] instance=" + v.filling + " | expected=" + v.expected +
               " | actual=" + v.actual + "\n";
    }
    if (rep.total_violations > static_cast<std::int64_t>(rep.violations.size()))
        out += "  (showing " + std::to_string(rep.violations.size()) + " of " +
               std::to_string(rep.total_violations) + ")\n";
    out += std::string("result: ") + (rep.pass() ? "PASS" : "FAIL") + "\n";
    return out;
}

std::string report_json_text(const VerificationReport& rep) {
    nlohmann::json doc;
    doc["theorem"] = rep.theorem;
    doc["space"] = rep.space;
    doc["instances"] = rep.instances;
    doc["total_violations"] = rep.total_violations;
    nlohmann::json list = nlohmann::json::array();
    for (const Violation& v : rep.violations) {
        nlohmann::json jv;
        jv["filling"] = v.filling;
        jv["expected"] = v.expected;
        jv["actual"] = v.actual;
        list.push_back(std::move(jv));
    }
    doc["violations"] = std::move(list);
    doc["pass"] = rep.pass();
    return doc.dump();
}

}  // namespace tabstat
