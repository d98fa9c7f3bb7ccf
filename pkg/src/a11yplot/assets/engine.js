/* a11yplot exploration engine; source and tests live in frontend/, rebuild with npm run build */
"use strict";
(() => {
  // src/sonify.ts
  var FREQUENCY_MIN = 220;
  var FREQUENCY_MAX = 880;
  var TONE_GAIN = 0.1;
  var TONE_SECONDS = 0.18;
  function layerValues(layer) {
    if (layer.type === "heatmap") {
      const grid = layer.data[0];
      return grid.values.flat().filter(isUsable);
    }
    if (layer.type === "box_vertical" || layer.type === "box_horizontal") {
      return layer.data.map((box) => box.median).filter(isUsable);
    }
    return layer.data.map((point) => point.y).filter(isUsable);
  }
  function valueAt(layer, index) {
    if (index < 0 || index >= layer.data.length || layer.type === "heatmap") {
      return null;
    }
    const point = layer.data[index];
    const value = layer.type === "box_vertical" || layer.type === "box_horizontal" ? point.median : point.y;
    return isUsable(value) ? value : null;
  }
  function isUsable(value) {
    return typeof value === "number" && Number.isFinite(value);
  }
  function frequencyFor(values, value) {
    const min = Math.min(...values);
    const max = Math.max(...values);
    const unit = max > min ? (value - min) / (max - min) : 0.5;
    return FREQUENCY_MIN + unit * (FREQUENCY_MAX - FREQUENCY_MIN);
  }
  function playTone(context, frequency) {
    const oscillator = context.createOscillator();
    const gain = context.createGain();
    oscillator.frequency.value = frequency;
    gain.gain.value = TONE_GAIN;
    oscillator.connect(gain);
    gain.connect(context.destination);
    oscillator.start();
    oscillator.stop(context.currentTime + TONE_SECONDS);
  }

  // src/braille.ts
  var BAND_CHARS = ["\u28C0", "\u28E4", "\u28F6", "\u28FF"];
  function bandIndex(value, min, max) {
    const range = max - min;
    if (!(range > 0)) {
      return 1;
    }
    const band = Math.floor(3 * (value - min) / range);
    return Math.max(0, Math.min(band, 3));
  }
  function brailleLine(values) {
    if (values.length === 0) {
      return "";
    }
    const min = Math.min(...values);
    const max = Math.max(...values);
    return values.map((v) => BAND_CHARS[bandIndex(v, min, max)]).join("");
  }
  function brailleFor(layer) {
    if (layer.type === "heatmap") {
      const grid = layer.data[0];
      const flat = grid.values.flat();
      if (flat.length === 0) {
        return "";
      }
      const min = Math.min(...flat);
      const max = Math.max(...flat);
      return grid.values.map((row) => row.map((v) => BAND_CHARS[bandIndex(v, min, max)]).join("")).join(" ");
    }
    return brailleLine(layerValues(layer));
  }

  // src/schema.ts
  var PLOT_TYPES = [
    "bar",
    "stacked_bar",
    "dodged_bar",
    "histogram",
    "line",
    "multiline",
    "box_horizontal",
    "box_vertical",
    "heatmap",
    "scatter"
  ];
  var PayloadError = class extends Error {
  };
  var MISSING = "accessible data payload is missing";
  var UNPARSEABLE = "accessible data payload could not be parsed";
  var EMPTY = "accessible data payload is empty";
  function malformed(path, detail) {
    return new PayloadError(`accessible data payload is malformed: ${path} ${detail}`);
  }
  function isRecord(value) {
    return typeof value === "object" && value !== null && !Array.isArray(value);
  }
  function requireString(value, path) {
    if (typeof value !== "string") {
      throw malformed(path, "must be a string");
    }
    return value;
  }
  function requireStringArray(value, path) {
    if (!Array.isArray(value) || value.some((v) => typeof v !== "string")) {
      throw malformed(path, "must be an array of strings");
    }
    return value;
  }
  function parseDocument(text) {
    if (text === null || text === "") {
      throw new PayloadError(MISSING);
    }
    let doc;
    try {
      doc = JSON.parse(text);
    } catch {
      throw new PayloadError(UNPARSEABLE);
    }
    if (!isRecord(doc)) {
      throw malformed("$", "must be an object");
    }
    const id = requireString(doc.id, "$.id");
    const subplotsDoc = doc.subplots;
    if (!Array.isArray(subplotsDoc) || subplotsDoc.length === 0) {
      throw new PayloadError(EMPTY);
    }
    const subplots = subplotsDoc.map((sub, i) => parseSubplot(sub, `$.subplots[${i}]`));
    return { id, subplots };
  }
  function parseSubplot(doc, path) {
    if (!isRecord(doc)) {
      throw malformed(path, "must be an object");
    }
    const { row, col } = doc;
    if (typeof row !== "number" || typeof col !== "number") {
      throw malformed(path, "needs numeric row and col");
    }
    if (!Array.isArray(doc.layers) || doc.layers.length === 0) {
      throw malformed(`${path}.layers`, "must be a non-empty array");
    }
    const layers = doc.layers.map((layer, j) => parseLayer(layer, `${path}.layers[${j}]`));
    return { row, col, layers };
  }
  function parseLayer(doc, path) {
    if (!isRecord(doc)) {
      throw malformed(path, "must be an object");
    }
    const type = requireString(doc.type, `${path}.type`);
    if (!PLOT_TYPES.includes(type)) {
      throw malformed(`${path}.type`, `unknown plot type "${type}"`);
    }
    const axes = parseAxes(doc.axes, `${path}.axes`);
    const selector = requireString(doc.selector, `${path}.selector`);
    if (!Array.isArray(doc.data) || doc.data.length === 0) {
      throw malformed(`${path}.data`, "must be a non-empty array");
    }
    const data = doc.data.map((point, k) => {
      if (!isRecord(point)) {
        throw malformed(`${path}.data[${k}]`, "must be an object");
      }
      return point;
    });
    return { type, axes, selector, data };
  }
  function parseAxes(doc, path) {
    if (!isRecord(doc)) {
      throw malformed(path, "must be an object");
    }
    const axes = {
      x_label: requireString(doc.x_label, `${path}.x_label`),
      y_label: requireString(doc.y_label, `${path}.y_label`),
      title: requireString(doc.title, `${path}.title`)
    };
    if (doc.x_levels !== void 0 && doc.x_levels !== null) {
      axes.x_levels = requireStringArray(doc.x_levels, `${path}.x_levels`);
    }
    return axes;
  }
  function elementSemantics(type) {
    if (type === "multiline") {
      return "series";
    }
    if (type === "line" || type === "scatter" || type === "heatmap") {
      return "layer";
    }
    return "point";
  }
  var SELECTOR_TERM = /\[maidr-id="([^"]+)"\]/g;
  function selectorIds(selector) {
    const ids = [];
    for (const match of selector.matchAll(SELECTOR_TERM)) {
      ids.push(match[1]);
    }
    return ids;
  }
  function seriesLabels(layer) {
    const labels = [];
    for (const point of layer.data) {
      const label = point.series_label;
      if (typeof label === "string" && !labels.includes(label)) {
        labels.push(label);
      }
    }
    return labels;
  }
  function elementIndexFor(layer, pointIndex) {
    const semantics = elementSemantics(layer.type);
    if (semantics === "layer") {
      return 0;
    }
    if (semantics === "series") {
      const label = layer.data[pointIndex].series_label;
      return seriesLabels(layer).indexOf(label);
    }
    return pointIndex;
  }

  // src/highlight.ts
  var HIGHLIGHT_CLASS = "a11yplot-highlight";
  function ensureHighlightStyle(owner) {
    if (owner.getElementById(HIGHLIGHT_CLASS)) {
      return;
    }
    const style = owner.createElement("style");
    style.id = HIGHLIGHT_CLASS;
    style.textContent = `.${HIGHLIGHT_CLASS} { stroke: #d62728 !important; stroke-width: 2.5 !important; }`;
    owner.head.appendChild(style);
  }
  function clearHighlight(svg) {
    for (const element of Array.from(svg.querySelectorAll(`.${HIGHLIGHT_CLASS}`))) {
      element.classList.remove(HIGHLIGHT_CLASS);
    }
  }
  function applyHighlight(svg, layer, pointIndex) {
    clearHighlight(svg);
    if (pointIndex < 0 || pointIndex >= layer.data.length) {
      return null;
    }
    if (svg.ownerDocument) {
      ensureHighlightStyle(svg.ownerDocument);
    }
    const ids = selectorIds(layer.selector);
    const id = ids[elementIndexFor(layer, pointIndex)];
    if (id === void 0) {
      return null;
    }
    const element = svg.querySelector(`[maidr-id="${id}"]`);
    if (element === null) {
      return null;
    }
    element.classList.add(HIGHLIGHT_CLASS);
    return element;
  }

  // src/state.ts
  function initialState() {
    return {
      subplot: 0,
      layer: 0,
      point: -1,
      text: true,
      sonification: false,
      braille: false
    };
  }
  function currentSubplot(doc, state) {
    return doc.subplots[state.subplot];
  }
  function currentLayer(doc, state) {
    return currentSubplot(doc, state).layers[state.layer];
  }
  function clampIndex(value, count) {
    return Math.max(0, Math.min(value, count - 1));
  }
  var moved = (state) => ({
    state,
    changed: true,
    clampNote: null
  });
  var clamped = (state, note) => ({
    state,
    changed: false,
    clampNote: note
  });
  function stepPoint(doc, state, delta) {
    const count = currentLayer(doc, state).data.length;
    if (state.point === -1) {
      return moved({ ...state, point: 0 });
    }
    const next = state.point + delta;
    if (next < 0) {
      return clamped(state, "start of data");
    }
    if (next >= count) {
      return clamped(state, "end of data");
    }
    return moved({ ...state, point: next });
  }
  function stepLayer(doc, state, delta) {
    const layers = currentSubplot(doc, state).layers;
    const next = state.layer + delta;
    if (next < 0) {
      return clamped(state, "no layer below");
    }
    if (next >= layers.length) {
      return clamped(state, "no layer above");
    }
    const point = clampIndex(state.point, layers[next].data.length);
    return moved({ ...state, layer: next, point });
  }
  function stepSubplot(doc, state, delta) {
    const next = state.subplot + delta;
    if (next < 0) {
      return clamped(state, "no previous subplot");
    }
    if (next >= doc.subplots.length) {
      return clamped(state, "no next subplot");
    }
    const layers = doc.subplots[next].layers;
    const layer = clampIndex(state.layer, layers.length);
    const point = clampIndex(state.point, layers[layer].data.length);
    return moved({ ...state, subplot: next, layer, point });
  }
  function toggle(state, modality) {
    return { ...state, [modality]: !state[modality] };
  }

  // src/text.ts
  var FOCUS_MESSAGE = "chart active; use arrow keys to explore";
  function formatNumber(value) {
    if (Number.isInteger(value)) {
      return String(value);
    }
    return String(Number(value.toPrecision(4)));
  }
  function formatX(value) {
    return typeof value === "number" ? formatNumber(value) : value;
  }
  function describePoint(layer, index) {
    const xLabel = layer.axes.x_label || "x";
    const yLabel = layer.axes.y_label || "y";
    if (layer.type === "heatmap") {
      const grid = layer.data[index];
      const cols = grid.values.length ? grid.values[0].length : 0;
      return `grid of ${grid.values.length} rows by ${cols} columns`;
    }
    if (layer.type === "box_vertical" || layer.type === "box_horizontal") {
      return describeBox(layer, layer.data[index], index);
    }
    if (layer.type === "histogram") {
      const bin = layer.data[index];
      return `${xLabel} ${formatNumber(bin.xmin)} to ${formatNumber(bin.xmax)}, ${yLabel} ${formatNumber(bin.y)}`;
    }
    const point = layer.data[index];
    const parts = [`${xLabel} ${formatX(point.x)}`, `${yLabel} ${formatNumber(point.y)}`];
    if (point.fill !== void 0) {
      parts.unshift(point.fill);
    }
    if (point.series_label !== void 0) {
      parts.unshift(point.series_label);
    }
    return parts.join(", ");
  }
  function describeBox(layer, box, index) {
    const levels = layer.axes.x_levels;
    const label = levels && index < levels.length ? `${levels[index]}: ` : "";
    const summary = `low ${formatNumber(box.lower_extreme)}, first quartile ${formatNumber(box.q1)}, median ${formatNumber(box.median)}, third quartile ${formatNumber(box.q3)}, high ${formatNumber(box.upper_extreme)}`;
    const n = box.outliers.length;
    const outliers = n === 0 ? "" : n === 1 ? ", 1 outlier" : `, ${n} outliers`;
    return `${label}${summary}${outliers}`;
  }
  function layerLabel(layer, index, count) {
    return `layer ${index + 1} of ${count}: ${layer.type}`;
  }
  function subplotLabel(subplot, index, count) {
    const title = subplot.layers[0]?.axes.title;
    const suffix = title ? `: ${title}` : "";
    return `subplot ${index + 1} of ${count}${suffix}`;
  }
  function chartLabel(doc) {
    for (const subplot of doc.subplots) {
      for (const layer of subplot.layers) {
        if (layer.axes.title) {
          return layer.axes.title;
        }
      }
    }
    return "accessible chart";
  }
  function toggleMessage(modality, enabled) {
    return `${modality} ${enabled ? "on" : "off"}`;
  }

  // src/engine.ts
  function boot(root) {
    let count = 0;
    for (const svg of Array.from(root.querySelectorAll("svg[maidr-data]"))) {
      if (initChart(svg) !== null) {
        count += 1;
      }
    }
    return count;
  }
  function bootWhenReady(root = document) {
    if (root.readyState === "loading") {
      root.addEventListener("DOMContentLoaded", () => boot(root));
    } else {
      boot(root);
    }
  }
  function initChart(svg) {
    let doc;
    try {
      doc = parseDocument(svg.getAttribute("maidr-data"));
    } catch (error) {
      const message = error instanceof PayloadError ? error.message : "accessible data payload failed";
      announceFailure(svg, message);
      return null;
    }
    const chart = {
      svg,
      doc,
      state: initialState(),
      live: makeLiveRegion(svg),
      brailleStrip: makeBrailleStrip(svg),
      audio: null
    };
    svg.setAttribute("tabindex", "0");
    svg.setAttribute("role", "img");
    svg.setAttribute("aria-label", chartLabel(doc));
    svg.addEventListener("keydown", (event) => handleKey(chart, event));
    svg.addEventListener("focus", () => speak(chart.live, FOCUS_MESSAGE));
    return chart;
  }
  function makeLiveRegion(svg) {
    const owner = svg.ownerDocument;
    const region = owner.createElement("div");
    region.setAttribute("aria-live", "assertive");
    region.setAttribute("role", "status");
    region.style.position = "absolute";
    region.style.left = "-10000px";
    region.style.width = "1px";
    region.style.height = "1px";
    region.style.overflow = "hidden";
    svg.parentNode?.insertBefore(region, svg.nextSibling);
    return region;
  }
  function makeBrailleStrip(svg) {
    const owner = svg.ownerDocument;
    const strip = owner.createElement("pre");
    strip.className = "a11yplot-braille";
    strip.hidden = true;
    svg.parentNode?.insertBefore(strip, svg.nextSibling);
    return strip;
  }
  function announceFailure(svg, message) {
    const owner = svg.ownerDocument;
    const note = owner.createElement("p");
    note.setAttribute("role", "alert");
    note.textContent = message;
    svg.parentNode?.insertBefore(note, svg.nextSibling);
  }
  function speak(live, text) {
    live.textContent = "";
    live.textContent = text;
  }
  var TOGGLE_KEYS = {
    t: "text",
    s: "sonification",
    b: "braille"
  };
  function handleKey(chart, event) {
    const key = event.key;
    let handled = true;
    if (key === "ArrowRight" || key === "ArrowLeft") {
      applyStep(chart, stepPoint(chart.doc, chart.state, key === "ArrowRight" ? 1 : -1), null);
    } else if (key === "ArrowUp" || key === "ArrowDown") {
      const result = stepLayer(chart.doc, chart.state, key === "ArrowUp" ? 1 : -1);
      applyStep(chart, result, result.changed ? layerPrefix(chart, result.state) : null);
    } else if (key === "PageDown" || key === "PageUp") {
      const result = stepSubplot(chart.doc, chart.state, key === "PageDown" ? 1 : -1);
      applyStep(chart, result, result.changed ? subplotPrefix(chart, result.state) : null);
    } else if (key.toLowerCase() in TOGGLE_KEYS) {
      applyToggle(chart, TOGGLE_KEYS[key.toLowerCase()]);
    } else {
      handled = false;
    }
    if (handled) {
      event.preventDefault();
      event.stopPropagation();
    }
  }
  function layerPrefix(chart, state) {
    const layers = currentSubplot(chart.doc, state).layers;
    return layerLabel(layers[state.layer], state.layer, layers.length);
  }
  function subplotPrefix(chart, state) {
    const subplot = currentSubplot(chart.doc, state);
    return subplotLabel(subplot, state.subplot, chart.doc.subplots.length);
  }
  function applyStep(chart, result, prefix) {
    if (!result.changed) {
      if (result.clampNote !== null) {
        speak(chart.live, result.clampNote);
      }
      return;
    }
    chart.state = result.state;
    emit(chart, prefix);
  }
  function applyToggle(chart, modality) {
    chart.state = toggle(chart.state, modality);
    speak(chart.live, toggleMessage(modality, chart.state[modality]));
    if (modality === "braille") {
      updateBraille(chart);
    }
  }
  function emit(chart, prefix) {
    const layer = currentLayer(chart.doc, chart.state);
    applyHighlight(chart.svg, layer, chart.state.point);
    const description = chart.state.text && chart.state.point >= 0 ? describePoint(layer, chart.state.point) : null;
    const parts = [prefix, description].filter((part) => part !== null);
    if (parts.length > 0) {
      speak(chart.live, parts.join("; "));
    }
    if (chart.state.sonification) {
      sonifyPoint(chart, layer);
    }
    updateBraille(chart);
  }
  function sonifyPoint(chart, layer) {
    const value = valueAt(layer, chart.state.point);
    if (value === null) {
      return;
    }
    const context = chart.audio ?? (chart.audio = makeAudioContext());
    if (context === null) {
      return;
    }
    playTone(context, frequencyFor(layerValues(layer), value));
  }
  function makeAudioContext() {
    const AudioContextCtor = globalThis.AudioContext;
    return AudioContextCtor === void 0 ? null : new AudioContextCtor();
  }
  function updateBraille(chart) {
    if (!chart.state.braille) {
      chart.brailleStrip.hidden = true;
      chart.brailleStrip.textContent = "";
      return;
    }
    chart.brailleStrip.hidden = false;
    chart.brailleStrip.textContent = brailleFor(currentLayer(chart.doc, chart.state));
  }

  // src/main.ts
  bootWhenReady();
})();
