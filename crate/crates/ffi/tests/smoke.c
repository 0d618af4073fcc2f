#include <stdio.h>
#include <string.h>
#include "twobridge.h"

#define CHECK(c) do { if (!(c)) { fprintf(stderr, "line %d: %s (%s)\n", __LINE__, #c, tb_last_error()); return 1; } } while (0)

int main(void) {
    TbKnot *k = NULL;
    CHECK(tb_knot_parse("K(27,10)", &k) == TB_STATUS_OK);

    TbCasson c;
    CHECK(tb_casson(k, 1, 2, &c) == TB_STATUS_OK);
    CHECK(c.admissible && c.value.num == 70 && c.value.den == 1);

    int64_t coeffs[16];
    size_t n = 0;
    CHECK(tb_alexander(k, coeffs, 16, &n) == TB_STATUS_OK);
    int64_t at_minus_one = 0;
    for (size_t i = 0; i < n; i++) at_minus_one += (i % 2 ? -coeffs[i] : coeffs[i]);
    CHECK(at_minus_one == 27 || at_minus_one == -27);

    uint64_t dm = 0, dl = 0;
    CHECK(tb_ahat_degrees(k, &dm, &dl) == TB_STATUS_OK);
    CHECK(dl == 13);

    CHECK(tb_knot_new(4, 1, NULL) == TB_STATUS_NULL_POINTER);
    TbKnot *bad = NULL;
    CHECK(tb_knot_new(4, 1, &bad) == TB_STATUS_INVALID_ARGUMENT && bad == NULL);
    CHECK(strlen(tb_last_error()) > 0);

    tb_knot_free(k);
    printf("ok\n");
    return 0;
}
