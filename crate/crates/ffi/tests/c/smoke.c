#include <stdio.h>
#include <string.h>

#include "cobweb.h"

static int fail(const char *what) {
    fprintf(stderr, "%s: %s\n", what, cobweb_last_error_message());
    return 1;
}

int main(void) {
    CobwebMatrix *m = NULL;
    if (cobweb_matrix_parse("2 3\n101\n110\n", &m) != COBWEB_STATUS_OK) return fail("parse");

    bool ferrers = true;
    CobwebWitness w;
    if (cobweb_matrix_is_ferrers(m, &ferrers, &w) != COBWEB_STATUS_OK) return fail("is_ferrers");
    size_t dim = 0;
    if (cobweb_matrix_ferrers_dimension(m, 4, &dim) != COBWEB_STATUS_OK) return fail("dimension");
    cobweb_matrix_free(m);

    size_t sizes[] = {2, 3, 1};
    CobwebChain *c = NULL;
    if (cobweb_chain_complete(sizes, 3, &c) != COBWEB_STATUS_OK) return fail("complete");
    CobwebMatrix *z = NULL;
    if (cobweb_chain_zeta(c, &z) != COBWEB_STATUS_OK) return fail("zeta");
    char *text = NULL;
    if (cobweb_matrix_to_text(z, &text) != COBWEB_STATUS_OK) return fail("to_text");

    char *total = NULL;
    if (cobweb_count_cobweb_total(3, &total) != COBWEB_STATUS_OK) return fail("count");

    CobwebMatrix *bad = NULL;
    CobwebStatus status = cobweb_matrix_new(0, 1, &bad);

    printf("ferrers=%d witness=%zu,%zu,%zu,%zu dim=%zu total=%s status=%d\n%s",
           ferrers, w.r1, w.r2, w.c1, w.c2, dim, total, (int)status, text);

    cobweb_string_free(total);
    cobweb_string_free(text);
    cobweb_matrix_free(z);
    cobweb_chain_free(c);
    return 0;
}
