"""Command-line entry points: index, query, eval, serve.

Configuration precedence is flags > environment variables > defaults, where
the environment variable for --some-flag is RETRORANK_SOME_FLAG. Results go
to stdout, errors to stderr; the exit status is 0 only on success.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .corpus import CorpusError, load_corpus, resolved_comments
from .evalstats import (GoldsetError, ZeroVarianceError, load_goldset,
                        report_dict, report_text, run_eval)
from .ranker import (PRESETS, SearchEngine, UnknownPresetError, replace_config)
from .sentiment import LexiconError, default_lexicon, load_lexicon
from .service import create_app, resolve_config
from .textprep import default_stopwords, load_stopwords
from .vsm import EmptyQueryError, IndexFormatError, load_index, save_index

ENV_PREFIX = "RETRORANK_"


def _env(flag: str, fallback: str | None = None) -> str | None:
    return os.environ.get(ENV_PREFIX + flag.upper().replace("-", "_"), fallback)


def _add_common_io_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--corpus", default=_env("corpus"),
                        help="corpus file (one bug-report record per line)")
    parser.add_argument("--stopwords", default=_env("stopwords"),
                        help="stopword file; defaults to the built-in list")
    parser.add_argument("--lexicon-pos", default=_env("lexicon-pos"),
                        help="bonus word file; defaults to the built-in lexicon")
    parser.add_argument("--lexicon-neg", default=_env("lexicon-neg"),
                        help="penalty word file; defaults to the built-in lexicon")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="retrorank",
        description="Search and re-rank bug-fixing comments from resolved bug threads.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_index = sub.add_parser("index", help="build and persist the tf-idf index")
    _add_common_io_flags(p_index)
    p_index.add_argument("--index", default=_env("index"), required=_env("index") is None,
                         help="output path for the persisted index")

    p_query = sub.add_parser("query", help="rank comments against a query")
    _add_common_io_flags(p_query)
    p_query.add_argument("--index", default=_env("index"),
                         help="optional persisted index (skips rebuilding)")
    p_query.add_argument("--q", default=_env("q"), help="query text")
    p_query.add_argument("--config", default=_env("config", "vsm+sa+tr"),
                         help="preset: " + "|".join(sorted(PRESETS)))
    p_query.add_argument("--weights", default=_env("weights"),
                         help="fusion weights as w_vsm,w_sa,w_tr")
    p_query.add_argument("--k", type=int, default=int(_env("k", "10")))
    p_query.add_argument("--top-m", type=int, default=int(_env("top-m", "50")))
    p_query.add_argument("--format", choices=("text", "machine"),
                         default=_env("format", "text"))

    p_eval = sub.add_parser("eval", help="run the goldset evaluation harness")
    _add_common_io_flags(p_eval)
    p_eval.add_argument("--goldset", default=_env("goldset"),
                        help="goldset file (one query record per line)")
    p_eval.add_argument("--config", default=_env("config", ",".join(sorted(PRESETS))),
                        help="comma-separated preset names")
    p_eval.add_argument("--top-m", type=int, default=int(_env("top-m", "50")))
    p_eval.add_argument("--alpha", type=float, default=float(_env("alpha", "0.05")))
    p_eval.add_argument("--format", choices=("text", "machine"),
                        default=_env("format", "text"))

    p_serve = sub.add_parser("serve", help="start the HTTP service")
    _add_common_io_flags(p_serve)
    p_serve.add_argument("--port", type=int, default=int(_env("port", "8765")))
    p_serve.add_argument("--static", default=_env("static"),
                         help="directory of web UI assets to serve at /")
    return parser


def _load_stopwords(args) -> frozenset[str]:
    return load_stopwords(args.stopwords) if args.stopwords else default_stopwords()


def _load_lexicon(args):
    if args.lexicon_pos or args.lexicon_neg:
        if not (args.lexicon_pos and args.lexicon_neg):
            raise LexiconError("--lexicon-pos and --lexicon-neg must be given together")
        return load_lexicon(args.lexicon_pos, args.lexicon_neg)
    return default_lexicon()


def _require(value, flag: str):
    if not value:
        raise SystemExit2(f"missing required option {flag} "
                          f"(or {ENV_PREFIX}{flag.strip('-').upper().replace('-', '_')})")
    return value


class SystemExit2(Exception):
    """Usage-level error: message printed to stderr, exit status 2."""


def _build_engine(args, need_lexicon: bool = True) -> SearchEngine:
    corpus = load_corpus(_require(args.corpus, "--corpus"))
    stopwords = _load_stopwords(args)
    lexicon = _load_lexicon(args) if need_lexicon else None
    index = None
    if getattr(args, "index", None) and Path(args.index).exists():
        index = load_index(args.index)
        if index.doc_count != len(resolved_comments(corpus)):
            raise IndexFormatError(
                f"{args.index}: indexed {index.doc_count} comments but the corpus "
                f"has {len(resolved_comments(corpus))} resolved comments; re-run index"
            )
    return SearchEngine(corpus, lexicon, stopwords, index=index)


def cmd_index(args) -> int:
    corpus = load_corpus(_require(args.corpus, "--corpus"))
    engine = SearchEngine(corpus, lexicon=None, stopwords=_load_stopwords(args))
    save_index(engine.index, args.index)
    print(f"{engine.index.doc_count} comments indexed, "
          f"{len(engine.index.doc_freq)} distinct terms -> {args.index}")
    return 0


def cmd_query(args) -> int:
    engine = _build_engine(args)
    config = resolve_config(args.config, args.weights, k=args.k, top_m=args.top_m)
    query_text = _require(args.q, "--q").strip()
    if not query_text:
        raise SystemExit2("empty query: pass keywords via --q, e.g. "
                          "--q 'rotate text 90 degrees'")
    response = engine.query_response(query_text, config)
    if args.format == "machine":
        for record in response["results"]:
            print(json.dumps(record, ensure_ascii=False))
        return 0
    if not response["results"]:
        print("no matching comments")
        return 0
    for item in response["results"]:
        print(f"#{item['rank']}  combined={item['combined']:.4f}  "
              f"bug {item['bug_id']} comment {item['comment_index']}")
        print(f"    {item['title']}")
        print(f"    vsm={item['vsm_raw']:.4f}/{item['vsm_norm']:.3f}  "
              f"sa={item['sa_raw']:+.4f}/{item['sa_norm']:.3f}  "
              f"tr={item['tr_raw']:.4f}/{item['tr_norm']:.3f}")
        print(f"    {item['excerpt']}")
    print(f"({len(response['results'])} results in {response['timing_ms']:.1f} ms, "
          f"config {response['config']['name']})")
    return 0


def cmd_eval(args) -> int:
    engine = _build_engine(args)
    goldset = load_goldset(_require(args.goldset, "--goldset"))
    names = [name.strip() for name in args.config.split(",") if name.strip()]
    configs = [replace_config(resolve_config(name), top_m=args.top_m) for name in names]
    report = run_eval(engine.corpus, engine.lexicon, goldset, configs,
                      alpha=args.alpha, engine=engine)
    if args.format == "machine":
        print(json.dumps(report_dict(report), ensure_ascii=False))
    else:
        print(report_text(report))
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    engine = _build_engine(args)
    app = create_app(engine, static_dir=args.static)
    uvicorn.run(app, host="127.0.0.1", port=args.port, log_level="info")
    return 0


_COMMANDS = {"index": cmd_index, "query": cmd_query, "eval": cmd_eval, "serve": cmd_serve}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except SystemExit2 as exc:
        print(f"retrorank: {exc}", file=sys.stderr)
        return 2
    except (CorpusError, GoldsetError, LexiconError, UnknownPresetError,
            EmptyQueryError, IndexFormatError, ZeroVarianceError, ValueError) as exc:
        print(f"retrorank: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"retrorank: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
