#include <chrono>
#include <cstdio>

#include "nct/group.hpp"
#include "nct/hom.hpp"
#include "nct/presets.hpp"
#include "nct/tower.hpp"

using namespace nct;

static double now_s() {
    using namespace std::chrono;
    return duration<double>(steady_clock::now().time_since_epoch()).count();
}

int main() {
    setvbuf(stdout, nullptr, _IONBF, 0);
    double t0 = now_s();
    GroupHom f = make_hom(preset_group("S3"), preset_group("S4"),
                          {Perm::from_images({2, 1, 3, 4}), Perm::from_images({2, 3, 1, 4})});
    LimitResult lim = inverse_limit(f);
    const PermGroup& L = lim.limit_group;
    std::printf("%.1fs limit |L|=%llu deg=%zu\n", now_s() - t0, (unsigned long long)L.order(),
                (size_t)L.degree());
    auto a = lower_central_series(f.domain());
    std::printf("%.1fs lcs(dom) len=%zu\n", now_s() - t0, a.size());
    auto b = lower_central_series(L);
    std::printf("%.1fs lcs(L) len=%zu last=%llu\n", now_s() - t0, b.size(),
                (unsigned long long)b.back().order());
    for (size_t k = 0; k < 3; ++k) {
        QuotientResult q1 = quotient(f.domain(), k < a.size() ? a[k] : a.back());
        std::printf("%.1fs quotient(dom,%zu) |Q|=%llu deg=%zu\n", now_s() - t0, k,
                    (unsigned long long)q1.group.order(), (size_t)q1.group.degree());
        QuotientResult q2 = quotient(L, k < b.size() ? b[k] : b.back());
        std::printf("%.1fs quotient(L,%zu) |Q|=%llu deg=%zu\n", now_s() - t0, k,
                    (unsigned long long)q2.group.order(), (size_t)q2.group.degree());
    }
    return 0;
}
