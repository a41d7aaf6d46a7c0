#include "grascurve/ffenum.hpp"

#include <algorithm>
#include <thread>

namespace grascurve {

unsigned long long gaussian_binomial(int n, int k, std::int64_t p) {
    if (k < 0 || k > n) return 0;
    // prod_{i=0..k-1} (p^{n-i} - 1) / (p^{k-i} - 1)
    auto power = [&](int e) {
        unsigned long long r = 1;
        for (int i = 0; i < e; ++i) r *= static_cast<unsigned long long>(p);
        return r;
    };
    unsigned long long num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= power(n - i) - 1;
        den *= power(k - i) - 1;
    }
    return num / den;
}

namespace {

std::vector<std::vector<int>> pivot_patterns(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int c = start; c < n; ++c) {
            cur.push_back(c);
            rec(c + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

// All RREF matrices with the given pivot columns, in base-p counter order.
void iterate_pattern(std::int64_t p, int n, const std::vector<int>& pivots,
                     const std::function<void(const Subspace<GFp>&)>& fn) {
    int k = static_cast<int>(pivots.size());
    std::vector<std::pair<int, int>> free_pos;
    for (int i = 0; i < k; ++i)
        for (int j = pivots[i] + 1; j < n; ++j)
            if (std::find(pivots.begin(), pivots.end(), j) == pivots.end())
                free_pos.push_back({i, j});
    GFp like(0, p);
    Mat<GFp> base(k, n, like);
    for (int i = 0; i < k; ++i) base.at(i, pivots[i]) = GFp(1, p);
    std::vector<std::int64_t> counter(free_pos.size(), 0);
    for (;;) {
        Mat<GFp> m = base;
        for (std::size_t t = 0; t < free_pos.size(); ++t)
            m.at(free_pos[t].first, free_pos[t].second) = GFp(counter[t], p);
        fn(Subspace<GFp>::span(m));
        std::size_t idx = 0;
        while (idx < counter.size()) {
            if (++counter[idx] < p) break;
            counter[idx] = 0;
            ++idx;
        }
        if (idx == counter.size()) break;
        if (counter.empty()) break;
    }
}

}  // namespace

void for_each_subspace(std::int64_t p, int k, int n,
                       const std::function<void(const Subspace<GFp>&)>& fn) {
    for (const auto& pat : pivot_patterns(n, k)) iterate_pattern(p, n, pat, fn);
}

std::vector<GFp> reduce_vector(const std::vector<Rat>& v, std::int64_t p) {
    std::vector<GFp> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(reduce_mod_p(x, p));
    return out;
}

Mat<GFp> reduce_matrix(const Mat<Rat>& m, std::int64_t p) {
    Mat<GFp> out(m.rows(), m.cols(), GFp(0, p));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = reduce_mod_p(m.at(i, j), p);
    return out;
}

std::vector<Mat<GFp>> reduce_section_skews(const SectionModel& sec, std::int64_t p) {
    std::vector<Mat<GFp>> out;
    for (std::size_t h = 0; h < sec.count(); ++h) out.push_back(reduce_matrix(sec.skew(h), p));
    return out;
}

EnumObject enum_object_from_string(const std::string& s) {
    if (s == "lines") return EnumObject::Lines;
    if (s == "planes31") return EnumObject::Planes31;
    if (s == "planes22") return EnumObject::Planes22;
    if (s == "subspaces") return EnumObject::Subspaces;
    throw ParseError("unknown enumeration object: " + s);
}

std::string enum_object_name(EnumObject o) {
    switch (o) {
        case EnumObject::Lines: return "lines";
        case EnumObject::Planes31: return "planes31";
        case EnumObject::Planes22: return "planes22";
        case EnumObject::Subspaces: return "subspaces";
    }
    return "?";
}

namespace {

std::vector<std::vector<std::int64_t>> witness_rows(const Subspace<GFp>& s) {
    std::vector<std::vector<std::int64_t>> out;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        std::vector<std::int64_t> row;
        for (std::size_t j = 0; j < s.ambient_dim(); ++j) row.push_back(s.basis().at(i, j).value());
        out.push_back(row);
    }
    return out;
}

bool restrictions_all_zero(const std::vector<Mat<GFp>>& skews, const Subspace<GFp>& v) {
    for (const auto& om : skews) {
        Mat<GFp> r = skew_restrict(om, v);
        for (std::size_t i = 0; i < r.rows(); ++i)
            for (std::size_t j = 0; j < r.cols(); ++j)
                if (r.at(i, j).value() != 0) return false;
    }
    return true;
}

// Projective points of the row space of `kernel_local` lifted through the
// basis of v: canonical representatives (first nonzero coordinate 1).
std::vector<Subspace<GFp>> projective_points(const Mat<GFp>& kernel_local,
                                             const Subspace<GFp>& v, std::int64_t p) {
    std::vector<Subspace<GFp>> out;
    std::size_t d = kernel_local.rows();
    if (d == 0) return out;
    std::vector<std::int64_t> c(d, 0);
    for (;;) {
        // next combination
        std::size_t idx = 0;
        while (idx < d) {
            if (++c[idx] < p) break;
            c[idx] = 0;
            ++idx;
        }
        if (idx == d) break;
        // canonical: last incremented pattern gives duplicates; filter by
        // requiring the first nonzero coefficient equal to 1
        std::size_t first = 0;
        while (first < d && c[first] == 0) ++first;
        if (first == d || c[first] != 1) continue;
        Mat<GFp> pt(1, v.ambient_dim(), GFp(0, p));
        for (std::size_t t = 0; t < d; ++t) {
            if (c[t] == 0) continue;
            for (std::size_t j = 0; j < v.ambient_dim(); ++j) {
                GFp acc(0, p);
                for (std::size_t l = 0; l < v.dim(); ++l)
                    acc += kernel_local.at(t, l) * v.basis().at(l, j);
                pt.at(0, j) += GFp(c[t], p) * acc;
            }
        }
        out.push_back(Subspace<GFp>::span(pt));
    }
    return out;
}

}  // namespace

EnumResult enumerate_count(const EnumSpec& spec) {
    if (!is_prime(spec.p)) throw ParseError("enumeration modulus must be prime");
    int top_dim = 0;
    switch (spec.object) {
        case EnumObject::Lines: top_dim = 3; break;
        case EnumObject::Planes31: top_dim = 1; break;
        case EnumObject::Planes22: top_dim = 3; break;
        case EnumObject::Subspaces: top_dim = spec.k; break;
    }
    unsigned long long total = gaussian_binomial(5, top_dim, spec.p);
    if (total > spec.budget)
        throw BudgetExceeded("enumeration needs " + std::to_string(total) +
                             " membership tests, budget is " + std::to_string(spec.budget));
    auto skews = reduce_section_skews(spec.section, spec.p);
    const std::int64_t p = spec.p;

    auto patterns = pivot_patterns(5, top_dim);
    std::vector<unsigned long long> counts(patterns.size(), 0);
    std::vector<unsigned long long> tested(patterns.size(), 0);
    std::vector<std::vector<std::vector<std::vector<std::int64_t>>>> wits(patterns.size());

    auto process = [&](std::size_t pi) {
        iterate_pattern(p, 5, patterns[pi], [&](const Subspace<GFp>& v) {
            ++tested[pi];
            switch (spec.object) {
                case EnumObject::Lines: {
                    // common kernel of the restricted skew forms inside V3
                    Mat<GFp> stacked(0, 3, GFp(0, p));
                    for (const auto& om : skews) stacked = stacked.vstack(skew_restrict(om, v));
                    Mat<GFp> klocal(0, 3, GFp(0, p));
                    if (stacked.rows() == 0) {
                        klocal = Mat<GFp>::identity(3, GFp(0, p));
                    } else {
                        bool zero = true;
                        for (std::size_t i = 0; i < stacked.rows() && zero; ++i)
                            for (std::size_t j = 0; j < 3; ++j)
                                if (stacked.at(i, j).value() != 0) zero = false;
                        klocal = zero ? Mat<GFp>::identity(3, GFp(0, p))
                                      : rref_kernel(stacked).kernel;
                    }
                    std::size_t d = klocal.rows();
                    if (d > 0) {
                        unsigned long long pts = (gaussian_binomial(static_cast<int>(d), 1, p));
                        counts[pi] += pts;
                        if (spec.want_witnesses)
                            for (const auto& v1 : projective_points(klocal, v, p)) {
                                auto w = witness_rows(v1);
                                auto w3 = witness_rows(v);
                                w.insert(w.end(), w3.begin(), w3.end());
                                wits[pi].push_back(w);
                            }
                    }
                    break;
                }
                case EnumObject::Planes31: {
                    Mat<GFp> cons(skews.size(), 5, GFp(0, p));
                    for (std::size_t h = 0; h < skews.size(); ++h)
                        for (int j = 0; j < 5; ++j) {
                            GFp acc(0, p);
                            for (int i = 0; i < 5; ++i)
                                acc += v.basis().at(0, i) * skews[h].at(i, j);
                            cons.at(h, j) = acc;
                        }
                    std::size_t w;
                    if (skews.empty()) {
                        w = 5;
                    } else {
                        bool zero = true;
                        for (std::size_t i = 0; i < cons.rows() && zero; ++i)
                            for (int j = 0; j < 5; ++j)
                                if (cons.at(i, j).value() != 0) zero = false;
                        w = zero ? 5 : rref_kernel(cons).kernel.rows();
                    }
                    if (w >= 4) counts[pi] += gaussian_binomial(static_cast<int>(w) - 1, 3, p);
                    break;
                }
                case EnumObject::Planes22:
                case EnumObject::Subspaces: {
                    if (restrictions_all_zero(skews, v)) {
                        ++counts[pi];
                        if (spec.want_witnesses) wits[pi].push_back(witness_rows(v));
                    }
                    break;
                }
            }
        });
    };

    int jobs = std::max(1, spec.jobs);
    if (jobs <= 1 || patterns.size() <= 1) {
        for (std::size_t i = 0; i < patterns.size(); ++i) process(i);
    } else {
        std::vector<std::thread> workers;
        std::size_t stride = static_cast<std::size_t>(jobs);
        for (std::size_t w = 0; w < stride; ++w)
            workers.emplace_back([&, w]() {
                for (std::size_t i = w; i < patterns.size(); i += stride) process(i);
            });
        for (auto& t : workers) t.join();
    }

    EnumResult out;
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        out.count += counts[i];
        out.tested += tested[i];
        for (auto& w : wits[i]) out.witnesses.push_back(std::move(w));
    }
    return out;
}

PolyCheckReport locus_poly_check(EnumSpec spec, const std::vector<long>& predicted,
                                 const std::vector<std::int64_t>& primes) {
    PolyCheckReport rep;
    for (std::int64_t p : primes) {
        spec.p = p;
        unsigned long long c = enumerate_count(spec).count;
        long long pred = 0, pw = 1;
        for (long coeff : predicted) {
            pred += coeff * pw;
            pw *= p;
        }
        PolyCheckRow row{p, c, static_cast<unsigned long long>(pred)};
        rep.rows.push_back(row);
        if (row.count != row.predicted) rep.ok = false;
    }
    return rep;
}

}  // namespace grascurve
