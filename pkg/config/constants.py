"""
Application Constants
"""
import os

# =========================
# 台集合の上限
# =========================
MAX_GROUND_SET = 63          # 入力複体の頂点数上限（1ワードのビット集合）
MAX_CANONICAL_N = 10         # 置換総当たりによる標準形の上限
MAX_CLASSIFY_N = 8           # 1次元分類の上限（8頂点を超えるとT²≠0）
MAX_MATROID_N = 9            # マトロイドDBの要素数上限
MAX_ENUMERATE_MATROID_N = 5  # 全マトロイド総当たり列挙の上限
MAX_PRIME = 2 ** 16          # 有限体 GF(p) の p の上限（p < MAX_PRIME）

# =========================
# 係数体
# =========================
DEFAULT_FIELD = "q"
FIELD_CHOICES_HELP = "q | gf2 | gf<p> (p prime < 65536)"

# =========================
# 終了コード
# =========================
EXIT_OK = 0
EXIT_CLAIM_FAILS = 1
EXIT_USAGE = 2

# =========================
# 環境変数名
# =========================
JOBS_ENV_VAR = "COTAN_JOBS"
FIELD_ENV_VAR = "COTAN_FIELD"
LOG_LEVEL_ENV_VAR = "COTAN_LOG_LEVEL"

# =========================
# 分類結果（ゴールデンファイル）
# =========================
EXPECTED_1D_CLASSES = 26
# 同梱の26類の一覧
DEFAULT_GOLDEN_PATH = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))),
                                   "data", "classified_26.txt")

# =========================
# ログ
# =========================
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
DEFAULT_LOG_LEVEL = "WARNING"
