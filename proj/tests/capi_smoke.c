/* The public header must compile as C and the library must link from C. */
#include <stdio.h>

#include "mlsz.h"

int main(void) {
    mlsz_context* ctx = NULL;
    mlsz_scaled v;
    double re = 0.0, im = 0.0;
    if (mlsz_context_create(2.0, 10, 0.0, 0.0, &ctx) != MLSZ_OK) return 1;
    if (mlsz_combo(ctx, 0.5, 0.0, &v) != MLSZ_OK) return 1;
    if (mlsz_scaled_to_complex(v, &re, &im) != MLSZ_OK) return 1;
    mlsz_context_free(ctx);
    if (!(re > 0.0)) return 1;
    if (mlsz_context_create(0.5, 10, 0.0, 0.0, &ctx) != MLSZ_ERR_DOMAIN || ctx != NULL) return 1;
    printf("ok %s\n", mlsz_version());
    return 0;
}
