#include "sumrank/bounds.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace sumrank {

namespace {

using boost::multiprecision::cpp_int;

cpp_int ipow(cpp_int b, std::size_t e) {
    cpp_int r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= b;
    return r;
}

cpp_int binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    cpp_int r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        r *= cpp_int(n - i);
        r /= cpp_int(i + 1);
    }
    return r;
}

std::string str(const cpp_int& v) { return v.str(); }

BoundEntry upper_bound_entry(const std::string& id, const std::string& desc, const cpp_int& value,
                             const cpp_int& limit) {
    BoundStatus st = value < limit    ? BoundStatus::Satisfied
                     : value == limit ? BoundStatus::Tight
                                      : BoundStatus::Violated;
    return BoundEntry{id, desc, st, str(value), str(limit)};
}

BoundEntry lower_bound_entry(const std::string& id, const std::string& desc, const cpp_int& value,
                             const cpp_int& limit) {
    BoundStatus st = value > limit    ? BoundStatus::Satisfied
                     : value == limit ? BoundStatus::Tight
                                      : BoundStatus::Violated;
    return BoundEntry{id, desc, st, str(value), str(limit)};
}

BoundEntry not_applicable(const std::string& id, const std::string& desc,
                          const std::string& why) {
    return BoundEntry{id, desc + " [" + why + "]", BoundStatus::NotApplicable, "", ""};
}

}  // namespace

std::string bound_status_name(BoundStatus s) {
    switch (s) {
        case BoundStatus::Satisfied: return "SATISFIED";
        case BoundStatus::Tight: return "TIGHT";
        case BoundStatus::Violated: return "VIOLATED";
        case BoundStatus::NotApplicable: return "NOT_APPLICABLE";
    }
    return "?";
}

bool BoundReport::all_ok() const {
    for (const auto& e : entries)
        if (e.status == BoundStatus::Violated) return false;
    return true;
}

BoundQuery bound_query_for(const MsrdParams& p) {
    BoundQuery q;
    q.q = p.q;
    q.r = p.r;
    q.m = p.m;
    q.g = p.g;
    q.h = p.h;
    q.ell = p.ell;
    q.mu = p.mu;
    return q;
}

BoundReport evaluate_bounds(const BoundQuery& in) {
    if (in.q < 2 || in.r == 0 || in.m == 0 || in.g == 0 || in.h == 0)
        throw std::invalid_argument("incomplete bound query");
    const cpp_int q = in.q;
    const cpp_int qm = ipow(q, in.m);
    const cpp_int qr = ipow(q, in.r);
    const std::size_t mu = in.mu.value_or(in.g / in.ell.value_or(1));
    const std::size_t N = in.g * in.r;

    BoundReport rep;

    // sum-rank Singleton: |C| = q^(m k) against q^(m (N - d + 1)), d = h + 1
    if (in.h < N) {
        const std::size_t k = N - in.h;
        rep.entries.push_back(BoundEntry{"singleton",
                                         "sum-rank Singleton |C| <= q^(m (N - d + 1)), d = h + 1",
                                         BoundStatus::Tight, str(ipow(qm, k)), str(ipow(qm, k))});
    } else {
        rep.entries.push_back(
            not_applicable("singleton", "sum-rank Singleton bound", "h >= N"));
    }

    // necessary field size for shared-beta extended Moore matrices
    {
        const std::size_t need = in.r * std::min(in.h, mu);
        BoundStatus st = in.m > need    ? BoundStatus::Satisfied
                         : in.m == need ? BoundStatus::Tight
                                        : BoundStatus::Violated;
        rep.entries.push_back(BoundEntry{"field_size_necessary", "m >= r min{h, mu}", st,
                                         std::to_string(in.m), std::to_string(need)});
    }

    // g <= floor((h-2)/r) + floor((q-1) q^m / (q^r - 1)) + 1
    if (in.h >= 2) {
        cpp_int rhs = cpp_int((in.h - 2) / in.r) + (q - 1) * qm / (qr - 1) + 1;
        rep.entries.push_back(upper_bound_entry(
            "msrd_g_general", "g <= floor((h-2)/r) + floor((q-1) q^m/(q^r-1)) + 1", in.g, rhs));
    } else {
        rep.entries.push_back(not_applicable(
            "msrd_g_general", "g <= floor((h-2)/r) + floor((q-1) q^m/(q^r-1)) + 1", "needs h >= 2"));
    }

    // h = 2: g <= floor((q-1)(q^m + 1)/(q^r - 1))
    if (in.h == 2) {
        cpp_int rhs = (q - 1) * (qm + 1) / (qr - 1);
        rep.entries.push_back(
            upper_bound_entry("msrd_g_h2", "g <= floor((q-1)(q^m+1)/(q^r-1))", in.g, rhs));
    } else {
        rep.entries.push_back(
            not_applicable("msrd_g_h2", "g <= floor((q-1)(q^m+1)/(q^r-1))", "needs h = 2"));
    }

    // h = 2, r | m, r >= 2: g <= (q-1)(q^m - 1)/(q^r - 1)
    if (in.h == 2 && in.r >= 2 && in.m % in.r == 0) {
        cpp_int rhs = (q - 1) * (qm - 1) / (qr - 1);
        rep.entries.push_back(
            upper_bound_entry("msrd_g_h2_refined", "g <= (q-1)(q^m-1)/(q^r-1)", in.g, rhs));
    } else {
        rep.entries.push_back(not_applicable("msrd_g_h2_refined", "g <= (q-1)(q^m-1)/(q^r-1)",
                                             "needs h = 2, r >= 2, r | m"));
    }

    // m = r: g <= floor((h-2)/r) + q + 1
    if (in.m == in.r && in.h >= 2) {
        cpp_int rhs = cpp_int((in.h - 2) / in.r) + q + 1;
        rep.entries.push_back(
            upper_bound_entry("msrd_g_m_eq_r", "g <= floor((h-2)/r) + q + 1", in.g, rhs));
    } else {
        rep.entries.push_back(not_applicable("msrd_g_m_eq_r", "g <= floor((h-2)/r) + q + 1",
                                             in.h < 2 ? "needs h >= 2" : "needs m = r"));
    }

    // field-size lower bounds for locally repairable liftings
    if (in.delta) {
        const std::size_t d = *in.delta;
        if (d + 1 <= in.h && in.h <= in.g) {
            cpp_int rhs = cpp_int(in.g / (in.h * in.h)) * binomial(in.r + d - 1, d) - 1;
            rep.entries.push_back(lower_bound_entry(
                "lrc_field_1", "q^m >= floor(g/h^2) C(r+delta-1, delta) - 1", qm, rhs));
        } else {
            rep.entries.push_back(not_applicable("lrc_field_1",
                                                 "q^m >= floor(g/h^2) C(r+delta-1, delta) - 1",
                                                 "needs delta+1 <= h <= g"));
        }
        if (in.h < d + 1 && in.h <= in.g) {
            cpp_int rhs = cpp_int(in.g / (in.h * in.h)) * binomial(in.r + in.h - 2, in.h - 1) - 1;
            rep.entries.push_back(lower_bound_entry(
                "lrc_field_2", "q^m >= floor(g/h^2) C(r+h-2, h-1) - 1", qm, rhs));
        } else {
            rep.entries.push_back(not_applicable("lrc_field_2",
                                                 "q^m >= floor(g/h^2) C(r+h-2, h-1) - 1",
                                                 "needs h < delta+1, h <= g"));
        }
    }

    return rep;
}

}  // namespace sumrank
