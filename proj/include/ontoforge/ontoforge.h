/*
 * ontoforge C API.
 *
 * Every function returns an of_status. On failure the calling thread's last
 * error (machine code and message) is set and output parameters are left
 * untouched. Strings returned through char** are heap allocated and must be
 * released with of_string_free. Handles are released with their *_free
 * function; passing NULL to a free function is a no-op.
 *
 * Structured inputs and outputs are UTF-8 JSON text. Schemas are listed in
 * docs/c_api.md.
 */
#ifndef ONTOFORGE_H
#define ONTOFORGE_H

#include <stddef.h>

#if defined(_WIN32)
#define OF_API __declspec(dllexport)
#else
#define OF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum of_status {
  OF_OK = 0,
  OF_ERR_INVALID_ARGUMENT = 1,
  OF_ERR_NOT_FOUND = 2,
  OF_ERR_NETWORK = 3,
  OF_ERR_PARSE = 4,
  OF_ERR_CONFLICT = 5,
  OF_ERR_VALIDATION = 6,
  OF_ERR_IO = 7,
  OF_ERR_INTERNAL = 8
} of_status;

typedef enum of_syntax { OF_SYNTAX_TURTLE = 0, OF_SYNTAX_RDFXML = 1 } of_syntax;

typedef struct of_corpus of_corpus;
typedef struct of_ontology of_ontology;
typedef struct of_store of_store;
typedef struct of_session of_session;

OF_API const char* of_version(void);
OF_API const char* of_status_name(of_status status);

/* Last error on this thread; "" when the last call succeeded. */
OF_API const char* of_last_error_code(void);
OF_API const char* of_last_error_message(void);

OF_API void of_string_free(char* s);

/* ---- corpus ------------------------------------------------------------ */

/* config_json: {"source": "fixture"|"live", "fixture_dir", "api_url",
 * "user_agent", "max_links", "max_concurrent", "request_delay_ms",
 * "timeout_s"}; NULL or "" selects fixture mode with no directory. */
OF_API of_status of_corpus_fetch(const char* seed, const char* config_json, of_corpus** out);
OF_API of_status of_corpus_load(const char* path, of_corpus** out);
OF_API of_status of_corpus_parse(const char* text, of_corpus** out);
OF_API of_status of_corpus_save(const of_corpus* corpus, const char* path);
OF_API of_status of_corpus_serialize(const of_corpus* corpus, char** out);
/* {"seed", "articles": [slug...], "content_digest", "config_digest",
 *  "created_at", "failures": [{slug, code, message}], "warnings": [...]} */
OF_API of_status of_corpus_summary(const of_corpus* corpus, char** out_json);
OF_API void of_corpus_free(of_corpus* corpus);

/* ---- mining ------------------------------------------------------------ */

/* Pipeline config JSON: {"nmax", "min_frequency", "keep_interior_stopwords",
 * "case_fold", "stopwords": [...], "entity_gazetteer": [...]}; missing keys
 * take the defaults (shipped word lists, nmax 3, min_frequency 2). */
OF_API of_status of_pipeline_defaults(char** out_json);
OF_API of_status of_word_list_load(const char* path, char** out_json);

/* Ranked candidates as JSON lines. */
OF_API of_status of_mine(const of_corpus* corpus, const char* config_json, char** out_jsonl);

/* ---- ontology ---------------------------------------------------------- */

OF_API of_status of_ontology_new(const char* base_iri, of_ontology** out);
OF_API of_status of_ontology_seed(of_ontology** out);
/* Syntax is detected. ignored_json (may be NULL) receives the ignored
 * triples as a JSON array of N-Triples strings. */
OF_API of_status of_ontology_from_owl(const char* text, of_ontology** out, char** ignored_json);
OF_API of_status of_ontology_to_owl(const of_ontology* ontology, of_syntax syntax, char** out);
/* {"errors": [{code, message, elements}], "warnings": [...], "ok": bool} */
OF_API of_status of_ontology_validate(const of_ontology* ontology, char** out_json);
/* {"base_iri", "version", "concepts": [...], "relations": [...]} */
OF_API of_status of_ontology_to_json(const of_ontology* ontology, char** out_json);
/* [{"kind": "concept"|"property", "id", "on"}] */
OF_API of_status of_ontology_query(const of_ontology* ontology, const char* term, char** out_json);
OF_API of_status of_ontology_canonical_text(const of_ontology* ontology, char** out);
OF_API of_status of_ontology_add_concept(of_ontology* ontology, const char* label, char** out_json);
OF_API of_status of_ontology_add_relation(of_ontology* ontology, const char* kind, const char* source,
                                          const char* target);
OF_API void of_ontology_free(of_ontology* ontology);

/* ---- curation ---------------------------------------------------------- */

/* A directory holding session snapshots and decision logs. */
OF_API of_status of_store_open(const char* dir, of_store** out);
OF_API of_status of_store_list(const of_store* store, char** out_json);
OF_API void of_store_free(of_store* store);

/* Mines the corpus and opens a session. store may be NULL for an in-memory
 * session. options_json: {"from_seed": bool, "id": string, "config": {...}}. */
OF_API of_status of_session_create(of_store* store, const of_corpus* corpus, const char* options_json,
                                   of_session** out);
/* Loads and replays a persisted session. */
OF_API of_status of_session_open(of_store* store, const char* id, of_session** out);
OF_API of_status of_session_replay(const of_session* session, of_session** out);

/* {"id", "corpus_ref", "config_digest", "base", "created_at", "last_seq",
 *  "counts": {status: n}} */
OF_API of_status of_session_info(of_session* session, char** out_json);
/* status_filter NULL or "" for all; limit < 0 for no limit.
 * {"total", "offset", "limit", "items": [candidate...]} */
OF_API of_status of_session_candidates(of_session* session, const char* status_filter, long long offset,
                                       long long limit, char** out_json);
/* action: accept_concept, accept_property, accept_synonym, reject, undo,
 * relate, unrelate. out_json (may be NULL): {"seq", "warnings", "candidate"?} */
OF_API of_status of_session_decide(of_session* session, const char* phrase, const char* action,
                                   const char* payload_json, long long* seq, char** out_json);
OF_API of_status of_session_undo(of_session* session, const char* phrase, long long* seq, char** out_json);
OF_API of_status of_session_log(of_session* session, char** out_jsonl);
OF_API of_status of_session_draft(of_session* session, of_ontology** out);
OF_API of_status of_session_export_owl(of_session* session, of_syntax syntax, char** out);
/* 1 when both sessions hold equal candidates, draft and log. */
OF_API of_status of_session_same_state(of_session* a, of_session* b, int* out);
OF_API void of_session_free(of_session* session);

#ifdef __cplusplus
}
#endif

#endif
