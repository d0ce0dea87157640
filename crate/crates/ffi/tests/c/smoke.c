#include <stdio.h>
#include <string.h>
#include "clusterqp.h"

int main(void) {
    CqpSeed *s = NULL, *t = NULL, *u = NULL;
    if (cqp_seed_from_json("{\"lambda\": [[0, 1], [-1, 0]]}", &s) != CQP_STATUS_OK) return 1;
    size_t n = 0;
    if (cqp_seed_rank(s, &n) != CQP_STATUS_OK || n != 2) return 2;
    if (cqp_seed_mutate(s, 0, 1, &t) != CQP_STATUS_OK) return 3;
    if (cqp_seed_mutate(t, 0, -1, &u) != CQP_STATUS_OK) return 4;
    int64_t m[4];
    if (cqp_seed_exchange_matrix(u, m, 4) != CQP_STATUS_OK || m[1] != 1 || m[2] != -1) return 5;
    int32_t trivial = 0;
    if (cqp_word_is_trivial(s, "m1- o m1+", &trivial) != CQP_STATUS_OK || trivial != 1) return 6;
    if (cqp_word_is_trivial(s, "sigma o m1+", &trivial) != CQP_STATUS_INVALID_INPUT) return 6;
    const char *msg = cqp_last_error_message();
    if (msg == NULL || strlen(msg) == 0) return 7;
    char *label = NULL;
    if (cqp_classify_json("{\"vectors\": [[-1,2],[-1,-1],[2,-1]]}", &label)
        != CQP_STATUS_OK) return 8;
    printf("%s\n", label);
    int ok = strcmp(label, "E0(1)") == 0;
    cqp_string_free(label);
    cqp_seed_free(u);
    cqp_seed_free(t);
    cqp_seed_free(s);
    return ok ? 0 : 9;
}
