/** Minimal SVG string assembly. No DOM, no dependencies. */

export type AttrValue = string | number;
export type Attrs = Record<string, AttrValue | undefined>;

export function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

/** Compact coordinate formatting: three decimals, no trailing zeros. */
export function fmt(value: number): string {
  const rounded = Math.round(value * 1000) / 1000;
  // normalize -0
  return String(rounded === 0 ? 0 : rounded);
}

export function el(name: string, attrs: Attrs = {}, children: string[] = []): string {
  let open = `<${name}`;
  for (const [key, value] of Object.entries(attrs)) {
    if (value === undefined) continue;
    const text = typeof value === "number" ? fmt(value) : esc(value);
    open += ` ${key}="${text}"`;
  }
  if (children.length === 0) return `${open}/>`;
  return `${open}>${children.join("")}</${name}>`;
}

export function textEl(x: number, y: number, content: string, attrs: Attrs = {}): string {
  return el("text", { x, y, ...attrs }, [esc(content)]);
}

export function polylinePoints(points: Array<[number, number]>): string {
  return points.map(([x, y]) => `${fmt(x)},${fmt(y)}`).join(" ");
}

export function svgDoc(width: number, height: number, children: string[]): string {
  const attrs: Attrs = {
    xmlns: "http://www.w3.org/2000/svg",
    width,
    height,
    viewBox: `0 0 ${width} ${height}`,
    "font-family": "Helvetica, Arial, sans-serif",
    "font-size": 12,
  };
  const background = el("rect", { width, height, fill: "#ffffff" });
  return el("svg", attrs, [background, ...children]) + "\n";
}
