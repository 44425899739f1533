#include <stdio.h>

#include "deza.h"

int main(void) {
    DezaGraph *t7 = NULL, *n1 = NULL;
    DezaPermutation *p11 = NULL;
    size_t subset[9];
    size_t transpose[9] = {0, 3, 6, 1, 4, 7, 2, 5, 8};
    DezaParameters p;
    DezaSpectrum *s = NULL;
    DezaSpectrumEntry e;

    /* L2(3) inside T(7): (a, b) -> {a + 1, b + 4}, 1-based pairs in lexicographic order */
    for (size_t a = 0; a < 3; a++)
        for (size_t b = 0; b < 3; b++) {
            size_t i = a + 1, j = b + 4;
            subset[a * 3 + b] = (i - 1) * 7 - (i - 1) * i / 2 + (j - i - 1);
        }
    if (deza_graph_triangular(7, &t7) != DEZA_STATUS_OK) return 1;
    if (deza_permutation_new(transpose, 9, &p11) != DEZA_STATUS_OK) return 1;
    if (deza_gdss_switch(t7, subset, 9, p11, DEZA_VARIANT_N1, DEZA_GDSS_MODE_GDSS1, &n1) != DEZA_STATUS_OK) {
        fprintf(stderr, "%s\n", deza_last_error_message());
        return 1;
    }
    if (deza_recognize_deza(n1, &p) != DEZA_STATUS_OK) return 1;
    printf("(%zu,%zu,%zu,%zu)", p.n, p.k, p.b, p.a);
    if (deza_spectrum(n1, &s) != DEZA_STATUS_OK) return 1;
    for (size_t i = 0; i < deza_spectrum_len(s); i++) {
        deza_spectrum_entry(s, i, &e);
        printf(" %lld^%zu", (long long)e.exact, e.multiplicity);
    }
    printf("\n");
    deza_spectrum_free(s);
    deza_graph_free(n1);
    deza_permutation_free(p11);
    deza_graph_free(t7);
    return 0;
}
