/* softdec: algebraic soft-decision list decoding of Reed-Solomon codes over
 * additive memoryless channels, with the matching closed-form bounds and a
 * Monte Carlo campaign runner.
 *
 * Conventions. Field elements are canonical indices: index v names the
 * polynomial whose base-p digits are the coefficients of v (0 is zero).
 * Codes have full length n = q - 1 and evaluate messages, low coefficient
 * first, at every nonzero element in index order. Every function that can
 * fail returns sd_status and leaves outputs untouched on failure; the
 * thread-local sd_last_error() carries the diagnostic text.
 */
#ifndef SOFTDEC_H
#define SOFTDEC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sd_status {
  SD_OK = 0,
  SD_ERR_INVALID_ARGUMENT = 1, /* bad parameter or malformed input value */
  SD_ERR_DOMAIN = 2,           /* formula evaluated outside its window */
  SD_ERR_OVERFLOW = 3,         /* a guarded integer computation overflowed */
  SD_ERR_PARSE = 4,            /* JSON text could not be parsed */
  SD_ERR_INTERNAL = 5
} sd_status;

/* static storage, never freed */
const char* sd_version(void);

/* diagnostic for the most recent failure on this thread; valid until the
 * next library call on the same thread */
const char* sd_last_error(void);

/* every char** output below is heap-allocated by the library */
void sd_string_free(char* s);

typedef struct sd_field sd_field;
typedef struct sd_channel sd_channel;
typedef struct sd_code sd_code;
typedef struct sd_list sd_list;

/* ---- finite fields GF(p^m), p^m <= 2^16 ------------------------------ */

sd_status sd_field_new(uint32_t p, uint32_t m, sd_field** out);
sd_status sd_field_of_order(uint32_t q, sd_field** out);
void sd_field_free(sd_field* f);
uint32_t sd_field_order(const sd_field* f);
/* human-readable field description */
sd_status sd_field_describe(const sd_field* f, char** out);

/* ---- additive memoryless channels ------------------------------------ */

/* {"q": 16, "preset": "typewriter", "p_correct": 0.8}
 * presets: noiseless | typewriter | two_error | qsym
 * or an explicit pmf: {"field": {"p": 2, "m": 4}, "pmf": [ ...q entries... ]}
 */
sd_status sd_channel_from_json(const char* json, sd_channel** out);
void sd_channel_free(sd_channel* ch);
/* p_max: largest pmf entry; p_min: smallest positive entry (0 if noiseless);
 * gamma: sum of squared entries; any output pointer may be NULL */
sd_status sd_channel_stats(const sd_channel* ch, double* p_max, double* p_min,
                           double* gamma);
sd_status sd_channel_to_json(const sd_channel* ch, char** out);

/* ---- Reed-Solomon codes and codecs ----------------------------------- */

sd_status sd_code_new(const sd_field* f, uint32_t k, sd_code** out);
void sd_code_free(sd_code* c);
uint32_t sd_code_length(const sd_code* c);
uint32_t sd_code_dimension(const sd_code* c);

/* msg_len must equal k; cw must hold n symbols */
sd_status sd_encode(const sd_code* c, const uint32_t* msg, size_t msg_len,
                    uint32_t* cw);

/* classical syndrome decoder, corrects up to floor((n-k)/2) errors;
 * *ok = 0 on decoding failure, in which case msg and cw are untouched */
sd_status sd_bm_decode(const sd_code* c, const uint32_t* received, size_t len,
                       uint32_t* msg, uint32_t* cw, int* ok);

/* hard-decision list decode: uniform interpolation multiplicity `mult` on
 * the received symbols */
sd_status sd_gs_decode(const sd_code* c, const uint32_t* received, size_t len,
                       uint32_t mult, sd_list** out);

/* soft-decision list decode: multiplicities proportional to the reverse
 * channel probabilities, floor(lambda * p); select is "score" or "posterior"
 * and fixes how the reported best candidate is chosen */
sd_status sd_asd_decode(const sd_code* c, const sd_channel* ch,
                        const uint32_t* received, size_t len, uint32_t lambda,
                        const char* select, sd_list** out);

size_t sd_list_size(const sd_list* l);
/* index of the best candidate, -1 when the list is empty */
int sd_list_selected(const sd_list* l);
sd_status sd_list_message(const sd_list* l, size_t i, uint32_t* msg, size_t k);
sd_status sd_list_codeword(const sd_list* l, size_t i, uint32_t* cw, size_t n);
sd_status sd_list_score(const sd_list* l, size_t i, uint64_t* score);
void sd_list_free(sd_list* l);

/* ---- closed-form bounds, all as fractions of the block length --------- */

sd_status sd_radius_bm(double rate, double* out);
sd_status sd_radius_gs(double rate, double* out);
/* raw may leave [0, 1]; clipped is usable as an error fraction */
sd_status sd_radius_asd(double rate, double p_max, double p_min, double gamma,
                        double lambda, double* raw, double* clipped);
sd_status sd_gs_crossover_rate(const sd_channel* ch, double lambda,
                               double* out);
sd_status sd_always_on_list_rate(const sd_channel* ch, double lambda,
                                 double* out);
sd_status sd_list_size_bound(uint64_t cost, uint32_t k, uint64_t* out);
sd_status sd_list_size_bound_channel(uint32_t n, double lambda, double gamma,
                                     uint32_t k, uint64_t* out);
/* reliable-list exponent; *infinite = 1 marks the zero-miss region, where
 * *value is set to +inf. s_star and infinite may be NULL. */
sd_status sd_exponent_a(const sd_channel* ch, double rate, double lambda,
                        double* value, double* s_star, int* infinite);
/* selection-error exponent, clamped at 0; s_star may be NULL */
sd_status sd_exponent_b(const sd_channel* ch, double rate, double lambda,
                        double* value, double* s_star);
/* multivariate interpolation radius; form is "product" or "binomial" */
sd_status sd_radius_pv(const sd_channel* ch, double rate, double lambda,
                       uint32_t mvars, const char* form, double* raw,
                       double* clipped);

/* ---- tables and campaigns --------------------------------------------- */

/* named CSV tables: fig1a | fig1b | fig1c | fig2 | fig3 | fig4 */
sd_status sd_curves_preset(const char* name, char** out_csv);
/* radius and exponent bundle for one channel on the rate grid
 * start:stop:step; pv_form NULL defaults to "product" */
sd_status sd_curves_custom(const char* channel_json, double lambda,
                           double start, double stop, double step,
                           uint32_t mvars, const char* pv_form,
                           char** out_csv);
/* run a Monte Carlo campaign from a JSON trial spec; *pass reports whether
 * every assertion the campaign makes held (may be NULL) */
sd_status sd_simulate(const char* trial_spec_json, char** out_report_json,
                      int* pass);

#ifdef __cplusplus
}
#endif
#endif /* SOFTDEC_H */
