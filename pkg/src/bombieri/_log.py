from logging import WARNING, getLogger

LOG = getLogger('bombieri')


def quiet_third_party_logs(level: int = WARNING) -> None:
    # rich renders help text through markdown-it
    getLogger('markdown_it').setLevel(level)
