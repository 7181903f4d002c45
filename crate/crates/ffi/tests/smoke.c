#include <math.h>
#include <stdio.h>
#include "ncgabor.h"

#define N 12

int main(void) {
    NcgModule *m = NULL;
    if (ncg_module_new(N, "sep:2,2", &m) != NCG_STATUS_OK) {
        fprintf(stderr, "module: %s\n", ncg_last_error());
        return 1;
    }
    double g[2 * N], dual[2 * N];
    NcgFrameReport report;
    double residual;
    bool passes = false;

    if (ncg_periodized_gaussian(N, g) != NCG_STATUS_OK) return 2;
    if (ncg_frame_bounds(m, g, N, &report) != NCG_STATUS_OK || !report.is_frame) return 3;
    if (ncg_canonical_dual(m, g, N, dual) != NCG_STATUS_OK) return 4;
    if (ncg_wexler_raz(m, g, dual, N, &residual, &passes) != NCG_STATUS_OK || !passes) return 5;
    if (ncg_module_new(N, "sep:5,2", &m) != NCG_STATUS_INVALID_ARGUMENT || ncg_last_error() == NULL) return 6;

    printf("redundancy %zu/%zu residual %.3e\n", report.redundancy_numer, report.redundancy_denom, residual);
    ncg_module_free(m);
    return 0;
}
