"""CSV output: comma separated, ``\\n`` line endings, header row, values with
17 significant digits (round-trips float64 exactly), ``nan`` for singular
cells."""
import math


def fmt(value):
    if isinstance(value, bool):
        return "1" if value else "0"
    if value is None:
        return "none"
    if isinstance(value, str):
        return value
    value = float(value)
    if math.isnan(value):
        return "nan"
    return f"{value:.17g}"


def render_csv(headers, rows):
    lines = [",".join(headers)]
    lines.extend(",".join(fmt(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def write_csv(path, headers, rows):
    text = render_csv(headers, rows)
    with open(path, "w", newline="") as fh:
        fh.write(text)
    return text


def sweep_rows(table):
    xs = table.display_x()
    return [[x, *table.values[i]] for i, x in enumerate(xs)]


def sweep_csv(table):
    return render_csv(table.headers, sweep_rows(table))


def gnuplot_script(csv_name, headers, title=""):
    """Companion gnuplot script plotting every column against the first."""
    plots = ", \\\n     ".join(
        f"'{csv_name}' using 1:{j + 1} with lines" for j in range(1, len(headers))
    )
    return (
        "set datafile separator ','\n"
        "set key autotitle columnhead\n"
        f"set title '{title}'\n"
        f"set xlabel '{headers[0]}'\n"
        "set ylabel 'eps_z [rad/s^2]'\n"
        "set grid\n"
        f"plot {plots}\n"
    )
