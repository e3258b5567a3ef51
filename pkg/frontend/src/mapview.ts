import L from "leaflet";
import type { GpsTrack } from "./series";

export const DEFAULT_TILE_TEMPLATE = "https://tile.openstreetmap.org/{z}/{x}/{y}.png";

export interface MapTrack extends GpsTrack {
  color: string;
}

export class MapView {
  private map: L.Map | null = null;
  private lines: L.Polyline[] = [];
  private marker: L.CircleMarker | null = null;
  private veil: HTMLElement;
  private tracks: MapTrack[] = [];

  constructor(
    private el: HTMLElement,
    private tileTemplate: string,
    private onPick: (track: number, sampleIndex: number) => void,
  ) {
    this.veil = document.createElement("div");
    this.veil.className = "map-veil hidden";
    el.appendChild(this.veil);
  }

  private ensureMap(): L.Map {
    if (this.map) return this.map;
    this.map = L.map(this.el, { zoomSnap: 0.5 });
    L.tileLayer(this.tileTemplate, {
      maxZoom: 19,
      attribution: "map data from the configured tile provider",
    }).addTo(this.map);
    this.map.on("click", (event: L.LeafletMouseEvent) => this.pick(event.latlng));
    return this.map;
  }

  setTracks(tracks: MapTrack[]): void {
    const map = this.ensureMap();
    for (const line of this.lines) line.remove();
    this.lines = [];
    this.tracks = tracks;
    this.clearMarker();
    const bounds: L.LatLng[] = [];
    for (const track of tracks) {
      if (track.points.length === 0) continue;
      this.lines.push(L.polyline(track.points, { color: track.color, weight: 3 }).addTo(map));
      for (const p of track.points) bounds.push(L.latLng(p[0], p[1]));
    }
    if (bounds.length > 0) {
      map.fitBounds(L.latLngBounds(bounds), { padding: [16, 16] });
    }
    map.invalidateSize();
  }

  setMarker(lat: number, lon: number): void {
    const map = this.ensureMap();
    if (this.marker) {
      this.marker.setLatLng([lat, lon]);
    } else {
      this.marker = L.circleMarker([lat, lon], {
        radius: 7,
        color: "#222",
        fillColor: "#ffd34d",
        fillOpacity: 0.95,
        weight: 2,
      }).addTo(map);
    }
  }

  clearMarker(): void {
    if (this.marker) {
      this.marker.remove();
      this.marker = null;
    }
  }

  setDisabled(message: string | null): void {
    if (message === null) {
      this.veil.classList.add("hidden");
    } else {
      this.veil.textContent = message;
      this.veil.classList.remove("hidden");
    }
  }

  private pick(at: L.LatLng): void {
    let bestTrack = -1;
    let bestPoint = -1;
    let bestDist = Infinity;
    this.tracks.forEach((track, ti) => {
      track.points.forEach((p, pi) => {
        const dLat = p[0] - at.lat;
        const dLon = p[1] - at.lng;
        const d = dLat * dLat + dLon * dLon;
        if (d < bestDist) {
          bestDist = d;
          bestTrack = ti;
          bestPoint = pi;
        }
      });
    });
    if (bestTrack >= 0) {
      this.onPick(bestTrack, this.tracks[bestTrack]!.indices[bestPoint]!);
    }
  }
}
