// Measure readouts, the what-if recommendation table and the trajectory
// chart. Every value shown is the service's fraction; the only client-side
// formatting is decimal rendering of the service's own approximation.

import {
  FractionValue,
  Recommendation,
  SessionState,
  formatFraction,
} from "./api";

const SVG_NS = "http://www.w3.org/2000/svg";

export function renderMeasureValues(container: HTMLElement, state: SessionState): void {
  container.replaceChildren();
  const list = document.createElement("dl");
  list.className = "measure-values";
  for (const name of Object.keys(state.measures).sort()) {
    const value = state.measures[name];
    const term = document.createElement("dt");
    term.textContent = name;
    const detail = document.createElement("dd");
    detail.dataset.measure = name;
    detail.textContent = `${formatFraction(value)} (${value.approx.toFixed(3)})`;
    list.appendChild(term);
    list.appendChild(detail);
  }
  container.appendChild(list);
}

export function renderRecommendation(
  container: HTMLElement,
  recommendation: Recommendation | null,
): void {
  container.replaceChildren();
  if (!recommendation) {
    const note = document.createElement("p");
    note.className = "recommendation-empty";
    note.textContent = "No recommendation: nothing is undecided.";
    container.appendChild(note);
    return;
  }
  const headline = document.createElement("p");
  headline.className = "recommendation-headline";
  headline.dataset.argument = recommendation.argument;
  headline.textContent =
    `Ask about ${recommendation.argument} ` +
    `(expected ${recommendation.measure} reduction ` +
    `${formatFraction(recommendation.expected_reduction)})`;
  container.appendChild(headline);

  const table = document.createElement("table");
  table.className = "what-if";
  const head = document.createElement("tr");
  for (const caption of ["argument", "if in", "if out", "expected reduction"]) {
    const cell = document.createElement("th");
    cell.textContent = caption;
    head.appendChild(cell);
  }
  table.appendChild(head);
  for (const candidate of recommendation.candidates) {
    const row = document.createElement("tr");
    row.dataset.argument = candidate.argument;
    if (candidate.argument === recommendation.argument) {
      row.className = "what-if-best";
    }
    const cells: string[] = [
      candidate.argument,
      formatFraction(candidate.value_if_in),
      formatFraction(candidate.value_if_out),
      formatFraction(candidate.expected_reduction),
    ];
    for (const value of cells) {
      const cell = document.createElement("td");
      cell.textContent = value;
      row.appendChild(cell);
    }
    table.appendChild(row);
  }
  container.appendChild(table);
}

export function renderTrajectory(container: HTMLElement, state: SessionState): void {
  container.replaceChildren();
  const width = 360;
  const height = 140;
  const pad = 24;
  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
  svg.setAttribute("width", String(width));
  svg.setAttribute("height", String(height));
  svg.classList.add("trajectory");

  const steps = state.trajectory.length;
  const names = Object.keys(state.measures).sort();
  const values: Record<string, FractionValue[]> = {};
  for (const name of names) {
    values[name] = state.trajectory.map((point) => point.measures[name]);
  }
  const top = Math.max(
    1,
    ...names.flatMap((name) => values[name].map((v) => v.approx)),
  );
  const x = (step: number) =>
    steps === 1 ? width / 2 : pad + (step * (width - 2 * pad)) / (steps - 1);
  const y = (approx: number) => height - pad - (approx / top) * (height - 2 * pad);

  names.forEach((name, seriesIndex) => {
    const line = document.createElementNS(SVG_NS, "polyline");
    line.setAttribute(
      "points",
      values[name].map((v, step) => `${x(step)},${y(v.approx)}`).join(" "),
    );
    line.setAttribute("fill", "none");
    line.classList.add("trajectory-line", `series-${seriesIndex}`);
    line.dataset.measure = name;
    svg.appendChild(line);
    values[name].forEach((v, step) => {
      const label = document.createElementNS(SVG_NS, "text");
      label.setAttribute("x", String(x(step)));
      label.setAttribute("y", String(y(v.approx) - 6));
      label.setAttribute("text-anchor", "middle");
      label.classList.add("trajectory-value");
      label.dataset.measure = name;
      label.dataset.step = String(step);
      label.textContent = formatFraction(v);
      svg.appendChild(label);
    });
  });

  for (let step = 0; step < steps; step++) {
    const tick = document.createElementNS(SVG_NS, "text");
    tick.setAttribute("x", String(x(step)));
    tick.setAttribute("y", String(height - 6));
    tick.setAttribute("text-anchor", "middle");
    tick.classList.add("trajectory-step");
    tick.textContent = String(step);
    svg.appendChild(tick);
  }

  container.appendChild(svg);
}
